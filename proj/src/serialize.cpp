#include "mahler/serialize.hpp"

#include <mpfr.h>

namespace mahler {
namespace {

Verdict verdict_from_name(std::string_view s) {
  for (auto v : {Verdict::Irreducible, Verdict::Reducible, Verdict::Inconclusive})
    if (verdict_name(v) == s) return v;
  throw DomainError("unknown verdict '" + std::string(s) + "'");
}

std::string_view measure_method_name(MeasureMethod m) {
  return m == MeasureMethod::root_product ? "root_product" : "jensen_quadrature";
}

MeasureMethod measure_method_from_name(std::string_view s) {
  if (s == "root_product") return MeasureMethod::root_product;
  if (s == "jensen_quadrature") return MeasureMethod::jensen_quadrature;
  throw DomainError("unknown measure method '" + std::string(s) + "'");
}

Json to_json(const PairAssignment& a) { return Json{{"i", a.i}, {"b_i", a.b_i}, {"b_p_minus_i", a.b_p_minus_i}}; }

PairAssignment pair_from_json(const Json& j) {
  return PairAssignment{j.at("i").get<std::size_t>(), j.at("b_i").get<long>(), j.at("b_p_minus_i").get<long>()};
}

template <class T>
std::vector<std::string> coeff_strings(const std::vector<T>& c) {
  std::vector<std::string> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(x.get_str());
  return out;
}

}  // namespace

std::string decimal_string(const BigFloat& x, mpfr_rnd_t rnd) {
  if (!x.is_finite()) throw DomainError("cannot serialize a non-finite value");
  if (x.is_zero()) return "0";
  const auto digits = mpfr_get_str_ndigits(10, x.precision());
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, digits, x.get(), rnd);
  std::string m(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  while (m.size() > 1 && m.back() == '0') m.pop_back();
  // m is 0.m * 10^e; print as d.ddd e(e-1)
  std::string out = sign + m.substr(0, 1);
  if (m.size() > 1) out += "." + m.substr(1);
  if (e - 1 != 0) out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

BigFloat bigfloat_from_string(const std::string& s, Precision prec, mpfr_rnd_t rnd) {
  BigFloat x(prec);
  char* end = nullptr;
  mpfr_strtofr(x.get(), s.c_str(), &end, 10, rnd);
  if (s.empty() || *end != '\0' || !x.is_finite()) throw DomainError("bad decimal string '" + s + "'");
  return x;
}

std::string format_interval(const Interval& x, int digits) {
  char* buf = nullptr;
  const BigFloat mid = x.mid();
  const BigFloat rad = x.radius();
  if (mpfr_asprintf(&buf, "%.*Rg ± %.2Rg", digits, mid.get(), rad.get()) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Json to_json(const Interval& x) {
  return Json{{"lo", decimal_string(x.lo(), MPFR_RNDD)},
              {"hi", decimal_string(x.hi(), MPFR_RNDU)},
              {"precision_bits", x.precision()}};
}

Interval interval_from_json(const Json& j) {
  const auto prec = j.at("precision_bits").get<Precision>();
  return Interval(bigfloat_from_string(j.at("lo").get<std::string>(), prec, MPFR_RNDU),
                  bigfloat_from_string(j.at("hi").get<std::string>(), prec, MPFR_RNDD));
}

Json to_json(const RationalPoly& p) { return coeff_strings(p.coeffs()); }

RationalPoly rational_poly_from_json(const Json& j) {
  std::vector<mpq_class> c;
  for (const auto& s : j) {
    mpq_class q(s.get<std::string>());
    q.canonicalize();
    c.push_back(q);
  }
  return RationalPoly(std::move(c));
}

Json to_json(const IntPoly& p) { return coeff_strings(p.coeffs()); }

IntPoly int_poly_from_json(const Json& j) {
  std::vector<mpz_class> c;
  for (const auto& s : j) c.emplace_back(s.get<std::string>());
  return IntPoly(std::move(c));
}

Json to_json(const MeasureResult& m) {
  return Json{{"measure", to_json(m.measure)},
              {"log_measure", to_json(m.log_measure)},
              {"method", measure_method_name(m.method)},
              {"precision_bits", m.precision_bits}};
}

MeasureResult measure_from_json(const Json& j) {
  return MeasureResult{interval_from_json(j.at("measure")), interval_from_json(j.at("log_measure")),
                       measure_method_from_name(j.at("method").get<std::string>()),
                       j.at("precision_bits").get<Precision>()};
}

Json to_json(const RootSet& r) {
  Json roots = Json::array();
  for (const auto& root : r.roots)
    roots.push_back(Json{{"re", decimal_string(root.center.re)},
                         {"im", decimal_string(root.center.im)},
                         {"radius", decimal_string(root.radius, MPFR_RNDU)},
                         {"multiplicity", root.multiplicity}});
  return Json{{"precision_bits", r.precision_bits}, {"roots", roots}};
}

RootSet roots_from_json(const Json& j) {
  RootSet r;
  r.precision_bits = j.at("precision_bits").get<Precision>();
  for (const auto& e : j.at("roots")) {
    RootEstimate root;
    root.center = Complex(bigfloat_from_string(e.at("re").get<std::string>(), r.precision_bits),
                          bigfloat_from_string(e.at("im").get<std::string>(), r.precision_bits));
    root.radius = bigfloat_from_string(e.at("radius").get<std::string>(), r.precision_bits, MPFR_RNDD);
    root.multiplicity = e.at("multiplicity").get<unsigned>();
    r.roots.push_back(std::move(root));
  }
  return r;
}

Json to_json(const Certificate& c) {
  Json j{{"verdict", verdict_name(c.verdict)},
         {"method", method_name(c.method)},
         {"factor", c.factor ? to_json(*c.factor) : Json(nullptr)},
         {"possible_factor_degrees", c.possible_factor_degrees},
         {"combinations_tried", c.combinations_tried},
         {"note", c.note}};
  Json sieve = Json::array();
  for (const auto& s : c.sieve) {
    Json degrees = Json::array();
    for (const auto& [deg, count] : s.factor_degrees) degrees.push_back(Json{{"degree", deg}, {"count", count}});
    sieve.push_back(Json{{"prime", s.prime}, {"factor_degrees", degrees}});
  }
  j["sieve"] = sieve;
  if (c.ljunggren) {
    const LjunggrenTrace& t = *c.ljunggren;
    Json branches = Json::array();
    for (const auto& b : t.branches) {
      Json forced = Json::array();
      for (const auto& a : b.forced) forced.push_back(to_json(a));
      branches.push_back(Json{{"first", to_json(b.first)},
                              {"forced", forced},
                              {"dead_end_depth", b.dead_end_depth},
                              {"nodes", b.nodes},
                              {"solutions", b.solutions}});
    }
    j["ljunggren"] = Json{{"p", t.p},
                          {"pruning", t.pruning},
                          {"nodes_visited", t.nodes_visited},
                          {"solutions", t.solutions},
                          {"branches", branches},
                          {"only_trivial", t.only_trivial},
                          {"no_common_zero", t.no_common_zero},
                          {"symmetry_notes", t.symmetry_notes}};
  } else {
    j["ljunggren"] = nullptr;
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.verdict = verdict_from_name(j.at("verdict").get<std::string>());
  c.method = method_from_name(j.at("method").get<std::string>());
  if (!j.at("factor").is_null()) c.factor = int_poly_from_json(j.at("factor"));
  c.possible_factor_degrees = j.at("possible_factor_degrees").get<std::vector<unsigned>>();
  c.combinations_tried = j.at("combinations_tried").get<std::uint64_t>();
  c.note = j.at("note").get<std::string>();
  for (const auto& s : j.at("sieve")) {
    SievePattern pat;
    pat.prime = s.at("prime").get<std::uint64_t>();
    for (const auto& d : s.at("factor_degrees"))
      pat.factor_degrees.emplace_back(d.at("degree").get<unsigned>(), d.at("count").get<unsigned>());
    c.sieve.push_back(std::move(pat));
  }
  if (const Json& l = j.at("ljunggren"); !l.is_null()) {
    LjunggrenTrace t;
    t.p = l.at("p").get<long>();
    t.pruning = l.at("pruning").get<bool>();
    t.nodes_visited = l.at("nodes_visited").get<std::uint64_t>();
    t.solutions = l.at("solutions").get<std::vector<std::vector<long>>>();
    for (const auto& b : l.at("branches")) {
      BranchTrace bt;
      bt.first = pair_from_json(b.at("first"));
      for (const auto& a : b.at("forced")) bt.forced.push_back(pair_from_json(a));
      bt.dead_end_depth = b.at("dead_end_depth").get<std::size_t>();
      bt.nodes = b.at("nodes").get<std::uint64_t>();
      bt.solutions = b.at("solutions").get<std::size_t>();
      t.branches.push_back(std::move(bt));
    }
    t.only_trivial = l.at("only_trivial").get<bool>();
    t.no_common_zero = l.at("no_common_zero").get<bool>();
    t.symmetry_notes = l.at("symmetry_notes").get<std::vector<std::string>>();
    c.ljunggren = std::move(t);
  }
  return c;
}

Json to_json(const SearchRecord& r) {
  Json j{{"degree", r.degree},
         {"box_bound", r.box_bound},
         {"found", r.found()},
         {"candidates_scanned", r.candidates_scanned},
         {"symmetry_skipped", r.symmetry_skipped},
         {"reducible_count", r.reducible_count},
         {"irreducible_count", r.irreducible_count},
         {"inconclusive_count", r.inconclusive_count},
         {"measure_one_count", r.measure_one_count},
         {"ambiguous_count", r.ambiguous_count},
         {"below_one_count", r.below_one_count},
         {"symmetry_convention", kSymmetryConvention},
         {"wall_seconds", r.wall_seconds}};
  if (r.found()) {
    j["best_index"] = r.best_index;
    j["best_binomial"] = coeff_strings(r.best_poly->coords);
    j["best_monomial"] = to_json(r.best_poly->to_rational());
    j["best_measure"] = to_json(*r.best_measure);
  } else {
    j["best_index"] = nullptr;
    j["best_binomial"] = nullptr;
    j["best_monomial"] = nullptr;
    j["best_measure"] = nullptr;
  }
  return j;
}

SearchRecord search_record_from_json(const Json& j) {
  SearchRecord r;
  r.degree = j.at("degree").get<unsigned>();
  r.box_bound = j.at("box_bound").get<long>();
  r.candidates_scanned = j.at("candidates_scanned").get<std::uint64_t>();
  r.symmetry_skipped = j.at("symmetry_skipped").get<std::uint64_t>();
  r.reducible_count = j.at("reducible_count").get<std::uint64_t>();
  r.irreducible_count = j.at("irreducible_count").get<std::uint64_t>();
  r.inconclusive_count = j.at("inconclusive_count").get<std::uint64_t>();
  r.measure_one_count = j.at("measure_one_count").get<std::uint64_t>();
  r.ambiguous_count = j.at("ambiguous_count").get<std::uint64_t>();
  r.below_one_count = j.at("below_one_count").get<std::uint64_t>();
  r.wall_seconds = j.at("wall_seconds").get<double>();
  if (j.at("found").get<bool>()) {
    BinomialPoly b;
    for (const auto& s : j.at("best_binomial")) b.coords.emplace_back(s.get<std::string>());
    r.best_poly = std::move(b);
    r.best_measure = interval_from_json(j.at("best_measure"));
    r.best_index = j.at("best_index").get<std::uint64_t>();
  }
  return r;
}

Json to_json(const SeriesResult& s) {
  return Json{{"p", s.p},
              {"value", to_json(s.value)},
              {"terms_used", s.terms_used},
              {"tail_bound", s.tail_bound.get_str()},
              {"converged", s.converged}};
}

Json to_json(const BoundRow& r) {
  return Json{{"p", r.p},
              {"prime", r.prime},
              {"M_p", to_json(r.M_p)},
              {"m_p", to_json(r.m_p)},
              {"m_Q", to_json(r.m_q)},
              {"epsilon", r.epsilon.get_str()},
              {"difference", to_json(r.difference)},
              {"correction", to_json(r.correction)},
              {"bound_holds", r.bound_holds},
              {"series_consistent", r.series_consistent}};
}

Json to_json(const MonotonicityReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"p", row.p},
                        {"m_p", to_json(row.m_p)},
                        {"m_Q", to_json(row.m_q)},
                        {"epsilon", row.epsilon.get_str()},
                        {"decreasing", row.decreasing ? Json(*row.decreasing) : Json(nullptr)},
                        {"sufficient", row.sufficient ? Json(*row.sufficient) : Json(nullptr)}});
  return Json{{"rows", rows},
              {"strictly_decreasing", r.strictly_decreasing},
              {"sufficient_inequality", r.sufficient_inequality},
              {"offending", r.offending ? Json{r.offending->first, r.offending->second} : Json(nullptr)}};
}

MonotonicityReport monotonicity_from_json(const Json& j) {
  MonotonicityReport r;
  for (const auto& e : j.at("rows")) {
    MonotonicityRow row;
    row.p = e.at("p").get<long>();
    row.m_p = interval_from_json(e.at("m_p"));
    row.m_q = interval_from_json(e.at("m_Q"));
    row.epsilon = mpq_class(e.at("epsilon").get<std::string>());
    if (!e.at("decreasing").is_null()) row.decreasing = e.at("decreasing").get<bool>();
    if (!e.at("sufficient").is_null()) row.sufficient = e.at("sufficient").get<bool>();
    r.rows.push_back(std::move(row));
  }
  r.strictly_decreasing = j.at("strictly_decreasing").get<bool>();
  r.sufficient_inequality = j.at("sufficient_inequality").get<bool>();
  if (const Json& o = j.at("offending"); !o.is_null()) r.offending = std::make_pair(o[0].get<long>(), o[1].get<long>());
  return r;
}

Json make_envelope(std::string_view command, Json params, Json results) {
  return Json{{"command", command},
              {"params", std::move(params)},
              {"results", std::move(results)},
              {"tool_version", kToolVersion}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

}  // namespace mahler
