// mahler: Mahler measures, irreducibility certificates, asymptotics and
// minimal-measure search for integer-valued polynomials.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "mahler/asymptotics.hpp"
#include "mahler/families.hpp"
#include "mahler/irreducibility.hpp"
#include "mahler/measure.hpp"
#include "mahler/minsearch.hpp"
#include "mahler/parse.hpp"
#include "mahler/serialize.hpp"

using namespace mahler;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kReducible = 2, kInconclusive = 3, kEmptySearch = 4, kNoConvergence = 5 };

enum class Format { text, csv, json };

struct Globals {
  double tol = 1e-6;
  Precision precision = kDefaultPrecision;
  Format format = Format::text;
  unsigned threads = 1;
};

Json global_params(const Globals& g) {
  return Json{{"tol", g.tol}, {"precision_bits", g.precision}, {"threads", g.threads}};
}

int digits_for(double tol) { return std::max(6, static_cast<int>(std::ceil(-std::log10(tol))) + 2); }

std::string mid_string(const Interval& x, int digits) {
  char* buf = nullptr;
  const BigFloat m = x.mid();
  mpfr_asprintf(&buf, "%.*Rg", digits, m.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string rad_string(const Interval& x) {
  char* buf = nullptr;
  const BigFloat r = x.radius();
  mpfr_asprintf(&buf, "%.3Rg", r.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string opt_flag(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

void warn_composite(const std::string& text) {
  static const std::regex named(R"(\s*@(f|fstar|g|Q):\s*(\d+)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, named) && !is_prime(std::stol(m[2])))
    std::cerr << "warning: p = " << m[2] << " is composite; the polynomial need not be integer-valued\n";
}

RationalPoly read_poly(const std::string& text) {
  warn_composite(text);
  return parse_poly(text);
}

RootOptions root_options(const Globals& g) {
  RootOptions o;
  o.start_bits = g.precision;
  o.max_bits = std::max<Precision>(8192, g.precision);
  return o;
}

// measure ---------------------------------------------------------------

int cmd_measure(const Globals& g, const std::string& text) {
  const RationalPoly p = read_poly(text);
  const MeasureResult m = mahler_measure(p, g.tol, root_options(g));
  const int dig = digits_for(g.tol);
  switch (g.format) {
    case Format::json:
      std::cout << dump(make_envelope("measure", Json{{"poly", text}, {"global", global_params(g)}},
                                      Json{{"poly", to_json(p)}, {"result", to_json(m)}}));
      break;
    case Format::csv:
      std::cout << csv_line({"poly", "M_mid", "M_radius", "M_lo", "M_hi", "m_mid", "m_radius", "m_lo", "m_hi"});
      std::cout << csv_line({text, mid_string(m.measure, dig), rad_string(m.measure),
                             decimal_string(m.measure.lo(), MPFR_RNDD), decimal_string(m.measure.hi(), MPFR_RNDU),
                             mid_string(m.log_measure, dig), rad_string(m.log_measure),
                             decimal_string(m.log_measure.lo(), MPFR_RNDD),
                             decimal_string(m.log_measure.hi(), MPFR_RNDU)});
      break;
    case Format::text:
      std::cout << "P    = " << to_string(p) << "\n";
      std::cout << "M(P) = " << format_interval(m.measure, dig) << "\n";
      std::cout << "m(P) = " << format_interval(m.log_measure, dig) << "\n";
      std::cout << "precision: " << m.precision_bits << " bits\n";
      break;
  }
  return kOk;
}

// roots -----------------------------------------------------------------

int cmd_roots(const Globals& g, const std::string& text) {
  const RationalPoly p = read_poly(text);
  const RootSet r = find_roots(p, g.tol, root_options(g));
  const int dig = digits_for(g.tol);
  auto fmt = [dig](const BigFloat& x) {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", dig, x.get());
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  };
  switch (g.format) {
    case Format::json:
      std::cout << dump(make_envelope("roots", Json{{"poly", text}, {"global", global_params(g)}}, to_json(r)));
      break;
    case Format::csv:
      std::cout << csv_line({"re", "im", "radius", "multiplicity", "modulus"});
      for (const auto& root : r.roots) {
        const BigFloat mod = sqrt(root.center.re * root.center.re + root.center.im * root.center.im);
        std::cout << csv_line({fmt(root.center.re), fmt(root.center.im), decimal_string(root.radius, MPFR_RNDU),
                               std::to_string(root.multiplicity), fmt(mod)});
      }
      break;
    case Format::text:
      for (const auto& root : r.roots) {
        const BigFloat mod = sqrt(root.center.re * root.center.re + root.center.im * root.center.im);
        std::cout << fmt(root.center.re) << (root.center.im.sign() < 0 ? " - " : " + ") << fmt(abs(root.center.im))
                  << "i  |z| = " << fmt(mod) << "  r <= " << root.radius.to_string(3, MPFR_RNDU);
        if (root.multiplicity > 1) std::cout << "  (multiplicity " << root.multiplicity << ")";
        std::cout << "\n";
      }
      std::cout << "precision: " << r.precision_bits << " bits\n";
      break;
  }
  return kOk;
}

// table -----------------------------------------------------------------

int cmd_table(const Globals& g, const std::vector<long>& ps) {
  std::vector<BoundRow> rows;
  for (long p : ps) {
    if (!is_prime(p)) std::cerr << "warning: p = " << p << " is composite\n";
    rows.push_back(bound_row(p, g.tol));
  }
  const int dig = digits_for(g.tol);
  switch (g.format) {
    case Format::json: {
      Json out = Json::array();
      for (const auto& r : rows) out.push_back(to_json(r));
      std::cout << dump(make_envelope("table", Json{{"p", ps}, {"global", global_params(g)}}, Json{{"rows", out}}));
      break;
    }
    case Format::csv:
      std::cout << csv_line({"p", "prime", "M_p", "m_p", "m_Q", "epsilon", "difference", "bound_holds"});
      for (const auto& r : rows)
        std::cout << csv_line({std::to_string(r.p), r.prime ? "true" : "false", mid_string(r.M_p, dig),
                               mid_string(r.m_p, dig), mid_string(r.m_q, dig), r.epsilon.get_str(),
                               mid_string(r.difference, dig), r.bound_holds ? "true" : "false"});
      break;
    case Format::text:
      std::cout << "p    M(f_p)                        m_p                           m(Q_p)          eps_p        "
                   "|m_p - m(Q_p)| <= eps_p\n";
      for (const auto& r : rows) {
        std::ostringstream line;
        line << std::left;
        line.width(5);
        line << r.p;
        for (const Interval* x : {&r.M_p, &r.m_p}) {
          line.width(30);
          line << format_interval(*x, dig);
        }
        line.width(16);
        line << mid_string(r.m_q, dig);
        line.width(13);
        line << r.epsilon.get_d();
        line << (r.bound_holds ? "true" : "false");
        std::cout << line.str() << "\n";
      }
      break;
  }
  return kOk;
}

// irreducible -----------------------------------------------------------

int verdict_exit(Verdict v) {
  return v == Verdict::Irreducible ? kOk : v == Verdict::Reducible ? kReducible : kInconclusive;
}

void print_certificate(const Certificate& c) {
  std::cout << "verdict: " << verdict_name(c.verdict) << "\n";
  std::cout << "method:  " << method_name(c.method) << "\n";
  if (c.factor) std::cout << "factor:  " << to_string(*c.factor) << "\n";
  for (const auto& s : c.sieve) {
    std::cout << "mod " << s.prime << ":";
    for (const auto& [deg, count] : s.factor_degrees) std::cout << " " << count << "x deg " << deg;
    std::cout << "\n";
  }
  if (!c.possible_factor_degrees.empty() || !c.sieve.empty()) {
    std::cout << "possible factor degrees:";
    for (unsigned d : c.possible_factor_degrees) std::cout << " " << d;
    if (c.possible_factor_degrees.empty()) std::cout << " none";
    std::cout << "\n";
  }
  if (c.combinations_tried) std::cout << "combinations tried: " << c.combinations_tried << "\n";
  if (c.ljunggren) {
    const LjunggrenTrace& t = *c.ljunggren;
    std::cout << "p = " << t.p << ", nodes visited: " << t.nodes_visited << ", solutions: " << t.solutions.size()
              << ", pruning: " << yes_no(t.pruning) << "\n";
    std::cout << "only trivial solutions: " << yes_no(t.only_trivial)
              << ", no common zero with reciprocal: " << yes_no(t.no_common_zero) << "\n";
    for (const auto& b : t.branches) {
      std::cout << "  branch b_1 = " << b.first.b_i << ", b_" << t.p - 1 << " = " << b.first.b_p_minus_i << ": "
                << b.nodes << " nodes, " << b.solutions << " solutions";
      if (!b.forced.empty()) std::cout << ", " << b.forced.size() << " forced";
      if (b.dead_end_depth) std::cout << ", dead end at i = " << b.dead_end_depth;
      std::cout << "\n";
    }
    for (const auto& n : t.symmetry_notes) std::cout << "note: " << n << "\n";
  }
  if (!c.note.empty()) std::cout << "note: " << c.note << "\n";
}

int cmd_irreducible(const Globals& g, const std::string& text, long ljunggren_p, bool no_pruning, bool no_sieve) {
  Certificate cert;
  Json params{{"global", global_params(g)}};
  std::string subject;
  if (ljunggren_p > 0) {
    cert = ljunggren_verify(ljunggren_p, LjunggrenOptions{!no_pruning});
    params["ljunggren"] = ljunggren_p;
    params["pruning"] = !no_pruning;
    subject = "@fstar:" + std::to_string(ljunggren_p);
  } else {
    const RationalPoly p = read_poly(text);
    if (p.degree().is_minus_infinity() || p.degree().value() < 1) throw DomainError("need a polynomial of degree >= 1");
    GeneralOptions opts;
    opts.use_sieve = !no_sieve;
    cert = irreducible_general(primitive_int(p).primitive, opts);
    params["poly"] = text;
    params["sieve"] = !no_sieve;
    subject = text;
  }
  switch (g.format) {
    case Format::json:
      std::cout << dump(make_envelope("irreducible", params, to_json(cert)));
      break;
    case Format::csv: {
      std::string sieve;
      for (const auto& s : cert.sieve) {
        if (!sieve.empty()) sieve += ";";
        sieve += std::to_string(s.prime) + ":";
        for (std::size_t i = 0; i < s.factor_degrees.size(); ++i)
          sieve += (i ? "," : "") + std::to_string(s.factor_degrees[i].first) + "^" +
                   std::to_string(s.factor_degrees[i].second);
      }
      std::cout << csv_line({"input", "verdict", "method", "factor", "nodes_visited", "solutions", "sieve"});
      std::cout << csv_line({subject, std::string(verdict_name(cert.verdict)), std::string(method_name(cert.method)),
                             cert.factor ? to_string(*cert.factor) : "",
                             cert.ljunggren ? std::to_string(cert.ljunggren->nodes_visited) : "",
                             cert.ljunggren ? std::to_string(cert.ljunggren->solutions.size()) : "", sieve});
      break;
    }
    case Format::text:
      std::cout << "input:   " << subject << "\n";
      print_certificate(cert);
      break;
  }
  return verdict_exit(cert.verdict);
}

// asymptotics -----------------------------------------------------------

int cmd_asymptotics(const Globals& g, long p_max) {
  if (p_max < 3) throw DomainError("--pmax must be >= 3");
  const MonotonicityReport mono = verify_monotonicity(p_max, g.tol, g.threads);
  const std::vector<BoundRow> bounds = bound_report(p_max, g.tol, g.threads);

  struct OracleCell {
    long p;
    unsigned ell;
    Interval closed;
    BigFloat quad;
    mpq_class bound;
    bool agree, bounded;
  };
  std::vector<OracleCell> grid;
  for (long p : {3L, 7L, 11L})
    for (unsigned ell : {1U, 2U, 3U}) {
      OracleCell c{p, ell, F_ell_closed(p, ell, g.precision), F_ell_quadrature(p, ell, 4096, g.precision),
                   F_ell_bound(p, ell), false, false};
      c.agree = std::abs((c.closed.mid() - c.quad).to_double()) <= 1e-10;
      c.bounded = abs(c.closed).hi() <= BigFloat(c.bound, g.precision, MPFR_RNDD);
      grid.push_back(std::move(c));
    }
  bool all_bounds = true;
  for (const auto& b : bounds) all_bounds = all_bounds && b.bound_holds;
  const int dig = digits_for(g.tol);

  switch (g.format) {
    case Format::json: {
      Json b = Json::array();
      for (const auto& r : bounds) b.push_back(to_json(r));
      Json o = Json::array();
      for (const auto& c : grid)
        o.push_back(Json{{"p", c.p},
                         {"ell", c.ell},
                         {"closed", to_json(c.closed)},
                         {"quadrature", decimal_string(c.quad)},
                         {"bound", c.bound.get_str()},
                         {"agree", c.agree},
                         {"bounded", c.bounded}});
      std::cout << dump(make_envelope("asymptotics", Json{{"pmax", p_max}, {"global", global_params(g)}},
                                      Json{{"monotonicity", to_json(mono)},
                                           {"bounds", b},
                                           {"all_bounds_hold", all_bounds},
                                           {"oracle_grid", o}}));
      break;
    }
    case Format::csv:
      std::cout << csv_line({"p", "m_p", "m_p_radius", "m_Q", "epsilon", "correction", "decreasing", "sufficient",
                             "bound_holds", "series_consistent"});
      for (std::size_t i = 0; i < mono.rows.size(); ++i) {
        const auto& r = mono.rows[i];
        const auto& b = bounds[i];
        std::cout << csv_line({std::to_string(r.p), mid_string(r.m_p, dig), rad_string(r.m_p), mid_string(r.m_q, dig),
                               r.epsilon.get_str(), mid_string(b.correction, dig), opt_flag(r.decreasing),
                               opt_flag(r.sufficient), b.bound_holds ? "true" : "false",
                               b.series_consistent ? "true" : "false"});
      }
      break;
    case Format::text:
      std::cout << "p    m_p                       m(Q_p)          eps_p      m_p > m_{p+2}  sufficient  bound\n";
      for (std::size_t i = 0; i < mono.rows.size(); ++i) {
        const auto& r = mono.rows[i];
        std::ostringstream line;
        line << std::left;
        line.width(5);
        line << r.p;
        line.width(26);
        line << format_interval(r.m_p, 8);
        line.width(16);
        line << mid_string(r.m_q, 8);
        line.width(11);
        line << r.epsilon.get_d();
        line.width(15);
        line << (r.decreasing ? yes_no(*r.decreasing) : "-");
        line.width(12);
        line << (r.sufficient ? yes_no(*r.sufficient) : "-");
        line << yes_no(bounds[i].bound_holds);
        std::cout << line.str() << "\n";
      }
      if (mono.rows.size() > 1) {
        std::cout << "strictly decreasing: " << yes_no(mono.strictly_decreasing) << "\n";
        if (mono.offending)
          std::cout << "first overlap: p = " << mono.offending->first << ", " << mono.offending->second << "\n";
      }
      if (p_max >= 7) {
        std::cout << "sufficient inequality m(Q_p) - eps_p > m(Q_{p+2}) + eps_{p+2}: "
                  << (mono.sufficient_inequality ? "holds for every listed p >= 7" : "fails at p =");
        if (!mono.sufficient_inequality)
          for (const auto& r : mono.rows)
            if (r.sufficient == std::optional<bool>(false)) std::cout << " " << r.p;
        std::cout << "\n";
      }
      std::cout << "|m_p - m(Q_p)| <= eps_p for all p: " << yes_no(all_bounds) << "\n";
      std::cout << "F_l closed form vs quadrature (p in {3,7,11}, l in {1,2,3}):";
      bool ok = true;
      for (const auto& c : grid) ok = ok && c.agree && c.bounded;
      std::cout << (ok ? " agree and bounded" : " MISMATCH") << "\n";
      break;
  }
  return kOk;
}

// search ----------------------------------------------------------------

int cmd_search(const Globals& g, unsigned degree, long bound) {
  const SearchRecord r = search_min_measure(degree, bound, g.tol, SearchOptions{g.threads, 512});
  const int dig = digits_for(g.tol);
  switch (g.format) {
    case Format::json:
      std::cout << dump(make_envelope("search", Json{{"degree", degree}, {"box_bound", bound}, {"global", global_params(g)}},
                                      to_json(r)));
      break;
    case Format::csv: {
      std::cout << csv_line({"degree", "box_bound", "found", "binomial_coords", "polynomial", "M_mid", "M_radius",
                             "candidates", "irreducible", "reducible", "inconclusive", "measure_one"});
      std::string coords, poly, mid, rad;
      if (r.found()) {
        for (std::size_t i = 0; i < r.best_poly->coords.size(); ++i)
          coords += (i ? "," : "") + r.best_poly->coords[i].get_str();
        poly = to_string(r.best_poly->to_rational());
        mid = mid_string(*r.best_measure, dig);
        rad = rad_string(*r.best_measure);
      }
      std::cout << csv_line({std::to_string(degree), std::to_string(bound), r.found() ? "true" : "false", coords, poly,
                             mid, rad, std::to_string(r.candidates_scanned), std::to_string(r.irreducible_count),
                             std::to_string(r.reducible_count), std::to_string(r.inconclusive_count),
                             std::to_string(r.measure_one_count)});
      break;
    }
    case Format::text:
      std::cout << "degree " << degree << ", box |c_k| <= " << bound << ": " << r.candidates_scanned
                << " candidates\n";
      if (r.found()) {
        std::cout << "minimum M = " << format_interval(*r.best_measure, dig) << "\n";
        std::cout << "binomial coordinates (c_0..c_d): (";
        for (std::size_t i = 0; i < r.best_poly->coords.size(); ++i)
          std::cout << (i ? ", " : "") << r.best_poly->coords[i].get_str();
        std::cout << ")\n";
        std::cout << "polynomial: " << to_string(r.best_poly->to_rational()) << "\n";
      } else {
        std::cout << "no candidate found\n";
      }
      std::cout << "irreducible " << r.irreducible_count << ", reducible " << r.reducible_count << ", inconclusive "
                << r.inconclusive_count << ", M = 1 " << r.measure_one_count << ", undecided " << r.ambiguous_count
                << ", mirror-skipped " << r.symmetry_skipped << "\n";
      if (r.inconclusive_count) std::cout << "warning: inconclusive candidates were excluded\n";
      std::cout << "symmetry: " << kSymmetryConvention << "\n";
      std::cout << "wall time: " << r.wall_seconds << " s\n";
      break;
  }
  return r.found() ? kOk : kEmptySearch;
}

// basis -----------------------------------------------------------------

int cmd_basis(const Globals& g, const std::string& text, const std::string& coords_text) {
  RationalPoly p;
  std::vector<mpq_class> coords;
  if (!coords_text.empty()) {
    std::stringstream ss(coords_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      mpq_class q;
      if (q.set_str(item, 10) != 0) throw ParseError("bad coordinate '" + item + "'", 0);
      q.canonicalize();
      coords.push_back(q);
    }
    p = from_binomial_basis(std::span<const mpq_class>(coords));
  } else {
    p = read_poly(text);
    coords = to_binomial_basis(p);
  }
  const bool integer_valued = is_integer_valued(p);
  std::vector<std::string> cs;
  for (const auto& c : coords) cs.push_back(c.get_str());
  switch (g.format) {
    case Format::json:
      std::cout << dump(make_envelope("basis", Json{{"poly", text}, {"coords", coords_text}},
                                      Json{{"monomial", to_json(p)}, {"binomial", cs}, {"integer_valued", integer_valued}}));
      break;
    case Format::csv:
      std::cout << csv_line({"k", "monomial", "binomial"});
      for (std::size_t k = 0; k < std::max(coords.size(), p.coeffs().size()); ++k)
        std::cout << csv_line({std::to_string(k), k < p.coeffs().size() ? p.coeffs()[k].get_str() : "0",
                               k < cs.size() ? cs[k] : "0"});
      break;
    case Format::text: {
      std::cout << "monomial: " << to_string(p) << "\n";
      std::cout << "binomial: ";
      bool first = true;
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] == 0) continue;
        std::cout << (first ? "" : " + ") << "(" << coords[k].get_str() << ")*C(x," << k << ")";
        first = false;
      }
      if (first) std::cout << "0";
      std::cout << "\ncoordinates: " << (cs.empty() ? std::string("0") : "") ;
      for (std::size_t k = 0; k < cs.size(); ++k) std::cout << (k ? "," : "") << cs[k];
      std::cout << "\ninteger-valued: " << yes_no(integer_valued) << "\n";
      break;
    }
  }
  return kOk;
}

// family ----------------------------------------------------------------

int cmd_family(const Globals& g, const std::string& name, long p) {
  const Family f = family_from_name(name);
  const RationalPoly poly = make_family(f, p);
  const bool prime = is_prime(p);
  if (!prime) std::cerr << "warning: p = " << p << " is composite\n";
  const bool integer_valued = is_integer_valued(poly);
  switch (g.format) {
    case Format::json:
      std::cout << dump(make_envelope("family", Json{{"family", name}, {"p", p}},
                                      Json{{"monomial", to_json(poly)},
                                           {"text", to_string(poly)},
                                           {"prime", prime},
                                           {"integer_valued", integer_valued}}));
      break;
    case Format::csv:
      std::cout << csv_line({"family", "p", "prime", "integer_valued", "polynomial", "coefficients"});
      std::cout << csv_line({name, std::to_string(p), prime ? "true" : "false", integer_valued ? "true" : "false",
                             to_string(poly), coeff_list(poly)});
      break;
    case Format::text:
      std::cout << name << "_" << p << "(x) = " << to_string(poly) << "\n";
      std::cout << "coefficients: " << coeff_list(poly) << "\n";
      std::cout << "p prime: " << yes_no(prime) << ", integer-valued: " << yes_no(integer_valued) << "\n";
      break;
  }
  return kOk;
}

Precision env_precision() {
  if (const char* s = std::getenv("MAHLER_PRECISION_BITS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 53 && v <= 1 << 20) return static_cast<Precision>(v);
    std::cerr << "warning: ignoring MAHLER_PRECISION_BITS=" << s << "\n";
  }
  return kDefaultPrecision;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mahler measures of integer-valued polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolVersion));

  Globals g;
  g.precision = env_precision();
  std::string format = "text";
  app.add_option("--tol", g.tol, "target interval width")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--precision-bits", g.precision, "starting precision (env MAHLER_PRECISION_BITS)")
      ->check(CLI::Range(53, 1 << 20))
      ->capture_default_str();
  app.add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1, 1024))->capture_default_str();

  std::string poly_text;
  auto* measure = app.add_subcommand("measure", "Mahler measure M(P) and m(P) = log M(P)");
  measure->add_option("poly", poly_text, "polynomial, e.g. \"x-2\", coeffs:1,0,1, @f:3, @lehmer")->required();

  auto* roots = app.add_subcommand("roots", "certified complex roots");
  roots->add_option("poly", poly_text, "polynomial")->required();

  std::vector<long> table_ps{3, 5, 7, 11, 13, 17, 19};
  auto* table = app.add_subcommand("table", "M(f_p), m_p, m(Q_p) and eps_p for a list of odd p");
  table->add_option("p", table_ps, "odd p values")->check(CLI::Range(3L, 100000L))->capture_default_str();

  long ljunggren_p = 0;
  bool no_pruning = false, no_sieve = false;
  auto* irreducible = app.add_subcommand("irreducible", "irreducibility certificate over Q");
  irreducible->add_option("poly", poly_text, "polynomial");
  irreducible->add_option("--ljunggren", ljunggren_p, "reciprocal-product search for f*_p, p = 3 mod 4 prime");
  irreducible->add_flag("--no-pruning", no_pruning, "disable the remaining-budget pruning");
  irreducible->add_flag("--no-sieve", no_sieve, "skip the modular degree sieve");

  long p_max = 99;
  auto* asymptotics = app.add_subcommand("asymptotics", "monotonicity of m_p, eps_p bounds and F_l checks");
  asymptotics->add_option("--pmax", p_max, "largest odd p")->capture_default_str();

  unsigned degree = 3;
  long box = 5;
  auto* search = app.add_subcommand("search", "smallest measure > 1 in a box of binomial coordinates");
  search->add_option("-d,--degree", degree, "degree")->check(CLI::Range(1U, 64U))->capture_default_str();
  search->add_option("-B,--box", box, "coordinate bound")->check(CLI::NonNegativeNumber)->capture_default_str();

  std::string coords_text;
  auto* basis = app.add_subcommand("basis", "monomial <-> binomial coordinates");
  basis->add_option("poly", poly_text, "polynomial to convert");
  basis->add_option("--coords", coords_text, "binomial coordinates c_0,c_1,... to convert");

  std::string family_name_text;
  long family_p = 3;
  auto* family = app.add_subcommand("family", "print f_p, fstar_p, g_p or Q_p");
  family->add_option("name", family_name_text, "f, fstar, g or Q")
      ->required()
      ->check(CLI::IsMember({"f", "fstar", "g", "Q"}));
  family->add_option("p", family_p, "odd p >= 3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  g.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

  try {
    if (*measure) return cmd_measure(g, poly_text);
    if (*roots) return cmd_roots(g, poly_text);
    if (*table) return cmd_table(g, table_ps);
    if (*irreducible) {
      if ((ljunggren_p > 0) == !poly_text.empty()) {
        std::cerr << "error: give either a polynomial or --ljunggren p\n";
        return kUsage;
      }
      return cmd_irreducible(g, poly_text, ljunggren_p, no_pruning, no_sieve);
    }
    if (*asymptotics) return cmd_asymptotics(g, p_max);
    if (*search) return cmd_search(g, degree, box);
    if (*basis) {
      if (poly_text.empty() == coords_text.empty()) {
        std::cerr << "error: give either a polynomial or --coords\n";
        return kUsage;
      }
      return cmd_basis(g, poly_text, coords_text);
    }
    if (*family) return cmd_family(g, family_name_text, family_p);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << " (achieved " << e.achieved() << ")\n";
    return kNoConvergence;
  } catch (const UnitCircleRootError& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return kNoConvergence;
  }
  return kUsage;
}
