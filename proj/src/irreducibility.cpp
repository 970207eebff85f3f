#include "mahler/irreducibility.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "mahler/families.hpp"
#include "mahler/modular.hpp"

namespace mahler {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Irreducible: return "Irreducible";
    case Verdict::Reducible: return "Reducible";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view method_name(CertMethod m) {
  switch (m) {
    case CertMethod::LjunggrenSearch: return "LjunggrenSearch";
    case CertMethod::ModPDegreeSieve: return "ModPDegreeSieve";
    case CertMethod::BoundedFactorExhaustion: return "BoundedFactorExhaustion";
    case CertMethod::RationalRoot: return "RationalRoot";
    case CertMethod::ExplicitFactor: return "ExplicitFactor";
  }
  return "?";
}

CertMethod method_from_name(std::string_view name) {
  for (auto m : {CertMethod::LjunggrenSearch, CertMethod::ModPDegreeSieve, CertMethod::BoundedFactorExhaustion,
                 CertMethod::RationalRoot, CertMethod::ExplicitFactor})
    if (method_name(m) == name) return m;
  throw DomainError("unknown certificate method '" + std::string(name) + "'");
}

namespace {

IntPoly fstar_int(long p) { return primitive_int(make_family(Family::fstar, p)).primitive; }

long isqrt(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// ---- Ljunggren search ------------------------------------------------------

class LjunggrenSearch {
 public:
  LjunggrenSearch(long p, bool pruning) : p_(p), n_((p - 1) / 2), pruning_(pruning) {
    const IntPoly prod = product_poly(p);
    c_.resize(static_cast<std::size_t>(2 * p + 1));
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] = prod.coeff(k).get_si();
    b_.assign(static_cast<std::size_t>(p + 1), 0);
    b_[0] = p;
    b_[static_cast<std::size_t>(p)] = 1;
  }

  LjunggrenTrace run() {
    LjunggrenTrace t;
    t.p = p_;
    t.pruning = pruning_;
    const long budget = c_[static_cast<std::size_t>(p_)] - p_ * p_ - 1;
    dfs(1, budget, nullptr, false);
    t.nodes_visited = nodes_;
    t.solutions = std::move(solutions_);
    t.branches = std::move(branches_);
    return t;
  }

 private:
  long& b(long i) { return b_[static_cast<std::size_t>(i)]; }

  std::vector<std::pair<long, long>> children(long i, long rem) {
    long s = 0;
    for (long j = 1; j < i; ++j) s += b(j) * b(p_ - i + j);
    const long t = c_[static_cast<std::size_t>(i)] - s;
    const long lim = pruning_ ? isqrt(rem) : isqrt(p_ * p_ + 1);
    std::vector<std::pair<long, long>> out;
    // p * b_{p-i} + b_i = t, so b_i = t mod p
    long bi = -lim + floor_mod(t - (-lim), p_);
    for (; bi <= lim; bi += p_) {
      const long bpi = (t - bi) / p_;
      if (pruning_ ? bi * bi + bpi * bpi > rem : std::abs(bpi) > lim) continue;
      out.emplace_back(bi, bpi);
    }
    return out;
  }

  bool leaf_ok() {
    for (long k = n_ + 1; k <= p_; ++k) {
      long s = 0;
      for (long j = 0; j <= k; ++j) s += b(j) * b(p_ - k + j);
      if (s != c_[static_cast<std::size_t>(k)]) return false;
    }
    return true;
  }

  void dfs(long i, long rem, BranchTrace* br, bool on_forced) {
    ++nodes_;
    if (br) ++br->nodes;
    if (i > n_) {
      if (leaf_ok()) {
        solutions_.push_back(b_);
        if (br) ++br->solutions;
      }
      return;
    }
    const auto ch = children(i, rem);
    if (i == 1) {
      for (auto [bi, bpi] : ch) {
        branches_.push_back(BranchTrace{PairAssignment{1, bi, bpi}, {}, 0, 0, 0});
        const std::size_t idx = branches_.size() - 1;
        assign(i, bi, bpi);
        BranchTrace local = branches_[idx];
        dfs(2, rem - bi * bi - bpi * bpi, &local, true);
        branches_[idx] = std::move(local);
      }
      return;
    }
    if (on_forced && ch.empty()) br->dead_end_depth = static_cast<std::size_t>(i);
    const bool forced = on_forced && ch.size() == 1;
    if (forced) br->forced.push_back(PairAssignment{static_cast<std::size_t>(i), ch[0].first, ch[0].second});
    for (auto [bi, bpi] : ch) {
      assign(i, bi, bpi);
      dfs(i + 1, rem - bi * bi - bpi * bpi, br, forced);
    }
  }

  void assign(long i, long bi, long bpi) {
    b(i) = bi;
    b(p_ - i) = bpi;
  }

  long p_, n_;
  bool pruning_;
  std::vector<long> c_;
  std::vector<long> b_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<long>> solutions_;
  std::vector<BranchTrace> branches_;
};

// ---- helpers for the general test -----------------------------------------

constexpr std::uint64_t kFactorLimit = 1'000'000'000'000ULL;

/// Positive divisors of n (n <= kFactorLimit), ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::optional<std::uint64_t> small_abs(const mpz_class& v) {
  mpz_class a = abs(v);
  if (a > mpz_class(static_cast<unsigned long>(kFactorLimit))) return std::nullopt;
  return a.get_ui();
}

mpz_class mpz_of(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

/// b^d P(a/b).
mpz_class homogeneous_value(const IntPoly& p, const mpz_class& a, const mpz_class& b) {
  const std::size_t d = p.degree().value();
  mpz_class acc = 0, bpow = 1;
  std::vector<mpz_class> apow(d + 1);
  apow[0] = 1;
  for (std::size_t k = 1; k <= d; ++k) apow[k] = apow[k - 1] * a;
  for (std::size_t k = d + 1; k-- > 0;) {
    acc += p.coeffs()[k] * apow[k] * bpow;
    bpow *= b;
  }
  return acc;
}

IntPoly linear_factor(const mpz_class& a, const mpz_class& b) { return IntPoly({-a, b}); }

struct RootTest {
  bool complete = false;
  std::optional<IntPoly> factor;
};

RootTest rational_root_test(const IntPoly& p) {
  auto a0 = small_abs(p.coeffs().front());
  auto ad = small_abs(p.leading());
  if (!a0 || !ad) return {};
  for (auto num : divisors(*a0))
    for (auto den : divisors(*ad)) {
      if (std::gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        const mpz_class a = sign * mpz_of(num), b = mpz_of(den);
        if (homogeneous_value(p, a, b) == 0) return {true, linear_factor(a, b)};
      }
    }
  return {true, std::nullopt};
}

std::vector<bool> subset_sums(const std::vector<std::pair<unsigned, unsigned>>& pattern, std::size_t d) {
  std::vector<bool> s(d + 1, false);
  s[0] = true;
  for (auto [deg, count] : pattern)
    for (unsigned c = 0; c < count; ++c)
      for (std::size_t t = d + 1; t-- > deg;)
        if (s[t - deg]) s[t] = true;
  return s;
}

struct NodeChoice {
  mpz_class x;
  std::vector<mpz_class> divs;  // signed candidates for g(x)
};

/// Newton interpolation through (x_j, y_j), returned when all monomial
/// coefficients are integers.
std::optional<IntPoly> interpolate_integer(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
  const std::size_t n = xs.size();
  std::vector<mpq_class> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t j = n - 1; j >= level; --j) {
      dd[j] = (dd[j] - dd[j - 1]) / mpq_class(xs[j] - xs[j - level]);
      if (j == level) break;
    }
  if (dd[n - 1] == 0 || dd[n - 1].get_den() != 1) return std::nullopt;
  RationalPoly acc = RationalPoly::constant(dd[n - 1]);
  for (std::size_t j = n - 1; j-- > 0;) acc = acc * RationalPoly({mpq_class(-xs[j]), mpq_class(1)}) + RationalPoly::constant(dd[j]);
  std::vector<mpz_class> out;
  out.reserve(acc.size());
  for (const auto& c : acc.coeffs()) {
    if (c.get_den() != 1) return std::nullopt;
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

enum class Exhaustion { NoFactor, Found, OutOfBudget, NoNodes };

Exhaustion search_degree(const IntPoly& p, std::size_t k, std::uint64_t& tried, std::uint64_t budget,
                         std::optional<IntPoly>& found) {
  // nodes ordered 0, 1, -1, 2, -2, ... keeping those with fewest divisors
  std::vector<std::pair<std::size_t, NodeChoice>> pool;
  for (long t = 0; t <= 20; ++t) {
    const long x = (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
    const mpz_class v = p(mpz_class(x));
    if (v == 0) {
      found = linear_factor(mpz_class(x), 1);
      return Exhaustion::Found;
    }
    auto av = small_abs(v);
    if (!av) continue;
    NodeChoice nc{mpz_class(x), {}};
    for (auto d : divisors(*av)) nc.divs.push_back(mpz_of(d));
    pool.emplace_back(nc.divs.size(), std::move(nc));
  }
  if (pool.size() < k + 1) return Exhaustion::NoNodes;
  std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  pool.resize(k + 1);

  std::vector<mpz_class> xs;
  std::vector<std::vector<mpz_class>> choices;
  long double combos = 1;
  for (std::size_t j = 0; j <= k; ++j) {
    xs.push_back(pool[j].second.x);
    std::vector<mpz_class> c = pool[j].second.divs;
    if (j > 0) {
      const std::size_t n = c.size();
      for (std::size_t i = 0; i < n; ++i) c.push_back(-c[i]);
    }
    combos *= static_cast<long double>(c.size());
    choices.push_back(std::move(c));
  }
  if (static_cast<long double>(tried) + combos > static_cast<long double>(budget)) return Exhaustion::OutOfBudget;

  mpz_class norm2 = 0;
  for (const auto& c : p.coeffs()) norm2 += c * c;
  std::vector<mpz_class> mignotte2(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    const mpz_class bin = binomial(k, j);
    mignotte2[j] = bin * bin * norm2;
  }

  std::vector<std::size_t> idx(k + 1, 0);
  std::vector<mpz_class> ys(k + 1);
  while (true) {
    ++tried;
    for (std::size_t j = 0; j <= k; ++j) ys[j] = choices[j][idx[j]];
    if (auto g = interpolate_integer(xs, ys); g && g->degree() == Degree(k)) {
      bool within = true;
      for (std::size_t j = 0; j <= k && within; ++j) within = g->coeffs()[j] * g->coeffs()[j] <= mignotte2[j];
      if (within && mpz_divisible_p(p.leading().get_mpz_t(), g->leading().get_mpz_t()) &&
          exact_quotient(p, *g)) {
        found = primitive_part(*g);
        return Exhaustion::Found;
      }
    }
    std::size_t j = 0;
    while (j <= k && ++idx[j] == choices[j].size()) idx[j++] = 0;
    if (j > k) break;
  }
  return Exhaustion::NoFactor;
}

Certificate reducible(CertMethod m, IntPoly factor, std::string note = {}) {
  Certificate c;
  c.verdict = Verdict::Reducible;
  c.method = m;
  c.factor = std::move(factor);
  c.note = std::move(note);
  return c;
}

}  // namespace

bool common_zero_check(long p) {
  if (p < 3) throw DomainError("common_zero_check needs p >= 3");
  const IntPoly f = fstar_int(p);
  return resultant(f, reciprocal(f)) != 0;
}

IntPoly product_poly(long p) {
  if (p < 3) throw DomainError("product_poly needs p >= 3");
  const IntPoly f = fstar_int(p);
  return f * reciprocal(f);
}

Certificate ljunggren_verify(long p, LjunggrenOptions opts) {
  if (p < 3 || !is_prime(p) || p % 4 != 3)
    throw DomainError("ljunggren_verify needs a prime p = 3 mod 4, got " + std::to_string(p));
  LjunggrenTrace t = LjunggrenSearch(p, opts.pruning).run();
  std::vector<long> fstar(static_cast<std::size_t>(p + 1), 0);
  const IntPoly f = fstar_int(p);
  for (std::size_t k = 0; k < fstar.size(); ++k) fstar[k] = f.coeff(k).get_si();
  t.only_trivial = t.solutions.size() == 1 && t.solutions.front() == fstar;
  t.no_common_zero = common_zero_check(p);
  t.symmetry_notes = {
      "b_0 * b_p = p forces (b_0, b_p) in {(p,1), (1,p), (-p,-1), (-1,-p)}",
      "k -> -k maps (-p,-1) to (p,1) and (-1,-p) to (1,p)",
      "k -> reciprocal(k) maps (1,p) to (p,1) and preserves k * reciprocal(k)",
      "searched class (b_0, b_p) = (p, 1); its trivial solution is f*_p",
  };
  Certificate c;
  c.method = CertMethod::LjunggrenSearch;
  c.verdict = (t.only_trivial && t.no_common_zero) ? Verdict::Irreducible : Verdict::Inconclusive;
  if (!t.only_trivial) c.note = "nontrivial solution of k * reciprocal(k) = product";
  else if (!t.no_common_zero) c.note = "f*_p and its reciprocal share a zero";
  c.ljunggren = std::move(t);
  return c;
}

Certificate irreducible_general(const IntPoly& p, GeneralOptions opts) {
  if (p.is_zero() || p.degree() < Degree(1)) throw DomainError("irreducible_general needs degree >= 1");
  if (content(p) != 1) throw DomainError("irreducible_general needs a primitive polynomial");
  const std::size_t d = p.degree().value();

  Certificate cert;
  if (d == 1) {
    cert.verdict = Verdict::Irreducible;
    cert.method = CertMethod::RationalRoot;
    cert.note = "degree 1";
    return cert;
  }
  if (p.coeffs().front() == 0) return reducible(CertMethod::ExplicitFactor, IntPoly({0, 1}), "x divides P");

  const IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() >= Degree(1)) return reducible(CertMethod::ExplicitFactor, g, "gcd(P, P') is nontrivial");

  const RootTest rt = rational_root_test(p);
  if (rt.factor) return reducible(CertMethod::RationalRoot, *rt.factor);
  if (rt.complete && d <= 3) {
    cert.verdict = Verdict::Irreducible;
    cert.method = CertMethod::RationalRoot;
    cert.note = "no rational root and degree <= 3";
    return cert;
  }

  std::vector<bool> possible(d + 1, true);
  if (opts.use_sieve) {
    for (std::uint64_t q = 3; q <= opts.sieve_prime_limit && cert.sieve.size() < opts.sieve_primes; q += 2) {
      if (!modp::is_prime(q)) continue;
      const auto red = modp::reduce(p, q);
      if (red.size() != d + 1 || !modp::is_squarefree(red, q)) continue;
      SievePattern sp{q, modp::distinct_degree_factorization(red, q)};
      const auto sums = subset_sums(sp.factor_degrees, d);
      for (std::size_t t = 0; t <= d; ++t) possible[t] = possible[t] && sums[t];
      cert.sieve.push_back(std::move(sp));
    }
  }
  const std::size_t kmin = rt.complete ? 2 : 1;
  for (std::size_t t = 1; t < d; ++t)
    if (possible[t]) cert.possible_factor_degrees.push_back(static_cast<unsigned>(t));
  std::vector<std::size_t> to_search;
  for (std::size_t k = kmin; 2 * k <= d; ++k)
    if (possible[k]) to_search.push_back(k);

  if (to_search.empty()) {
    cert.verdict = Verdict::Irreducible;
    cert.method = CertMethod::ModPDegreeSieve;
    if (!cert.possible_factor_degrees.empty()) cert.note = "linear factors excluded by the rational root test";
    return cert;
  }
  if (d > opts.exhaustion_degree_cap) {
    cert.verdict = Verdict::Inconclusive;
    cert.method = CertMethod::ModPDegreeSieve;
    cert.note = "sieve inconclusive and degree above the exhaustion cap";
    return cert;
  }

  for (std::size_t k : to_search) {
    std::optional<IntPoly> factor;
    const Exhaustion e = search_degree(p, k, cert.combinations_tried, opts.combination_budget, factor);
    if (e == Exhaustion::Found) {
      Certificate r = reducible(CertMethod::BoundedFactorExhaustion, *factor);
      r.sieve = std::move(cert.sieve);
      r.possible_factor_degrees = std::move(cert.possible_factor_degrees);
      r.combinations_tried = cert.combinations_tried;
      return r;
    }
    if (e != Exhaustion::NoFactor) {
      cert.verdict = Verdict::Inconclusive;
      cert.method = CertMethod::BoundedFactorExhaustion;
      cert.note = e == Exhaustion::OutOfBudget ? "combination budget exhausted" : "not enough interpolation nodes";
      return cert;
    }
  }
  cert.verdict = Verdict::Irreducible;
  cert.method = CertMethod::BoundedFactorExhaustion;
  return cert;
}

}  // namespace mahler
