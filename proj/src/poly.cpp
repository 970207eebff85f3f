#include "mahler/poly.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace mahler {

namespace {

RationalPoly monic(const RationalPoly& p) {
  if (p.is_zero()) return p;
  mpq_class inv = 1 / p.leading();
  return p * inv;
}

mpz_class ipow(const mpz_class& base, std::size_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpq_class qpow(const mpq_class& base, std::size_t e) {
  mpq_class r(1);
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

IntPoly divide_coeffs_exact(const IntPoly& p, const mpz_class& d) {
  std::vector<mpz_class> c = p.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(c));
}

}  // namespace

RationalPoly to_rational(const IntPoly& p) {
  std::vector<mpq_class> c(p.coeffs().begin(), p.coeffs().end());
  return RationalPoly(std::move(c));
}

// ---- binomial basis -------------------------------------------------------

std::vector<mpq_class> to_binomial_basis(const RationalPoly& p) {
  if (p.is_zero()) return {};
  const std::size_t d = p.degree().value();
  std::vector<mpq_class> v(d + 1);
  for (std::size_t j = 0; j <= d; ++j) v[j] = p(mpq_class(static_cast<unsigned long>(j)));
  for (std::size_t k = 1; k <= d; ++k)
    for (std::size_t j = d; j >= k; --j) v[j] -= v[j - 1];
  return v;
}

RationalPoly binomial_poly(std::size_t k) {
  RationalPoly b = RationalPoly::constant(1);
  for (std::size_t i = 0; i < k; ++i) {
    RationalPoly factor({mpq_class(-static_cast<long>(i)), mpq_class(1)});
    b = b * factor;
    b *= mpq_class(1, static_cast<unsigned long>(i + 1));
  }
  return b;
}

RationalPoly from_binomial_basis(std::span<const mpq_class> coords) {
  RationalPoly sum;
  RationalPoly basis = RationalPoly::constant(1);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] != 0) sum += basis * coords[k];
    basis = basis * RationalPoly({mpq_class(-static_cast<long>(k)), mpq_class(1)});
    basis *= mpq_class(1, static_cast<unsigned long>(k + 1));
  }
  return sum;
}

RationalPoly from_binomial_basis(std::span<const mpz_class> coords) {
  std::vector<mpq_class> q(coords.begin(), coords.end());
  return from_binomial_basis(std::span<const mpq_class>(q));
}

bool is_integer_valued(const RationalPoly& p) {
  for (const auto& c : to_binomial_basis(p))
    if (c.get_den() != 1) return false;
  return true;
}

RationalPoly BinomialPoly::to_rational() const {
  return from_binomial_basis(std::span<const mpz_class>(coords));
}

std::optional<BinomialPoly> BinomialPoly::from_rational(const RationalPoly& p) {
  BinomialPoly b;
  for (const auto& c : to_binomial_basis(p)) {
    if (c.get_den() != 1) return std::nullopt;
    b.coords.push_back(c.get_num());
  }
  return b;
}

// ---- content / primitive part ---------------------------------------------

mpz_class content(const IntPoly& p) {
  mpz_class g(0);
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (p.leading() < 0) g = -g;
  return divide_coeffs_exact(p, g);
}

PrimitiveDecomposition primitive_int(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("primitive_int of the zero polynomial");
  mpz_class l(1);
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    mpz_class n = c.get_num() * (l / c.get_den());
    ints.push_back(std::move(n));
  }
  IntPoly scaled(std::move(ints));
  mpz_class g = content(scaled);
  if (scaled.leading() < 0) g = -g;
  PrimitiveDecomposition out{mpq_class(g, l), divide_coeffs_exact(scaled, g)};
  out.content.canonicalize();
  return out;
}

// ---- division -------------------------------------------------------------

DivMod<mpq_class> divmod(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPoly(), a};
  std::vector<mpq_class> r = a.coeffs();
  const std::size_t db = b.degree().value();
  std::vector<mpq_class> q(r.size() - db);
  const mpq_class inv = 1 / b.leading();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    mpq_class f = r[k] * inv;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
    q[k - db] = f;
  }
  r.resize(db);
  return {RationalPoly(std::move(q)), RationalPoly(std::move(r))};
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r = a.coeffs();
  const std::size_t db = b.degree().value();
  std::vector<mpz_class> q(r.size() - db);
  const mpz_class& lb = b.leading();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), r[k].get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
    q[k - db] = f;
  }
  for (std::size_t k = 0; k < db; ++k)
    if (r[k] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const std::size_t db = b.degree().value();
  std::size_t e = a.degree().value() - db + 1;
  std::vector<mpz_class> r = a.coeffs();
  const mpz_class& lb = b.leading();
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t dr = r.size() - 1;
    const mpz_class lr = r.back();
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[dr - db + j] -= lr * b.coeffs()[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    --e;
  }
  const mpz_class scale = ipow(lb, e);
  for (auto& c : r) c *= scale;
  return IntPoly(std::move(r));
}

// ---- gcd / resultant (subresultant PRS) -----------------------------------

IntPoly poly_gcd(const IntPoly& a0, const IntPoly& b0) {
  if (a0.is_zero() && b0.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  IntPoly a = a0, b = b0;
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return primitive_part(a);
  a = primitive_part(a);
  b = primitive_part(b);
  mpz_class g(1), h(1);
  for (;;) {
    const std::size_t delta = a.degree().value() - b.degree().value();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return primitive_part(b);
    if (r.degree() == Degree(0)) return IntPoly::constant(1);
    a = std::move(b);
    b = divide_coeffs_exact(r, g * ipow(h, delta));
    g = a.leading();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      mpz_class num = ipow(g, delta);
      mpz_class den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

RationalPoly poly_gcd(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  IntPoly g = poly_gcd(primitive_int(a).primitive, primitive_int(b).primitive);
  return monic(to_rational(g));
}

mpz_class resultant(const IntPoly& a0, const IntPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) throw DomainError("resultant with the zero polynomial");
  IntPoly a = a0, b = b0;
  const mpz_class ca = content(a), cb = content(b);
  a = divide_coeffs_exact(a, ca);
  b = divide_coeffs_exact(b, cb);
  const std::size_t da0 = a.degree().value(), db0 = b.degree().value();
  const mpz_class t = ipow(ca, db0) * ipow(cb, da0);
  int s = 1;
  if (da0 < db0) {
    std::swap(a, b);
    if ((da0 & 1U) && (db0 & 1U)) s = -1;
  }
  mpz_class g(1), h(1);
  for (;;) {
    const std::size_t da = a.degree().value(), db = b.degree().value();
    if (db == 0) {
      // h <- h^(1 - da) * lc(b)^da
      if (da == 0) {
        // nothing: both constants
      } else {
        mpz_class num = ipow(b.leading(), da);
        mpz_class den = ipow(h, da - 1);
        mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      }
      return s * t * h;
    }
    const std::size_t delta = da - db;
    if ((da & 1U) && (db & 1U)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = divide_coeffs_exact(r, g * ipow(h, delta));
    g = a.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      mpz_class num = ipow(g, delta);
      mpz_class den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

mpq_class resultant(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant with the zero polynomial");
  auto pa = primitive_int(a), pb = primitive_int(b);
  mpq_class r(resultant(pa.primitive, pb.primitive));
  r *= qpow(pa.content, b.degree().value());
  r *= qpow(pb.content, a.degree().value());
  return r;
}

std::vector<std::pair<RationalPoly, unsigned>> squarefree_decomposition(const RationalPoly& p) {
  std::vector<std::pair<RationalPoly, unsigned>> out;
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  if (p.degree() == Degree(0)) return out;
  RationalPoly a = monic(p);
  RationalPoly b = a.derivative();
  RationalPoly c = poly_gcd(a, b);
  RationalPoly w = divmod(a, c).quotient;
  RationalPoly y = divmod(b, c).quotient;
  RationalPoly z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > Degree(0)) {
    RationalPoly g = poly_gcd(w, z);
    if (g.degree() > Degree(0)) out.emplace_back(g, i);
    w = divmod(w, g).quotient;
    y = divmod(z, g).quotient;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

// ---- cyclotomic -----------------------------------------------------------

const IntPoly& cyclotomic(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic(0)");
  static std::mutex mu;
  static std::map<unsigned, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  IntPoly phi = IntPoly::monomial(1, n) - IntPoly::constant(1);
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) phi = *exact_quotient(phi, cyclotomic(d));
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(phi)).first->second;
}

namespace {
unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}
}  // namespace

CyclotomicSplit split_cyclotomic(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("split_cyclotomic of the zero polynomial");
  CyclotomicSplit out{p, {}};
  // Strip x^k; zero roots are not on the circle.
  std::size_t low = 0;
  while (p.coeffs()[low] == 0) ++low;
  RationalPoly core(std::vector<mpq_class>(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end()));
  if (core.degree() == Degree(0)) return out;

  // Unit-circle roots of a real polynomial are shared with its reciprocal.
  RationalPoly g = poly_gcd(core, reciprocal(core));
  if (g.degree() == Degree(0)) return out;
  const std::size_t dg = g.degree().value();
  double norm1 = 0;
  for (const auto& c : g.coeffs()) norm1 += std::abs(c.get_d());

  RationalPoly rest = core;
  for (unsigned n = 1; n <= 2 * dg * dg + 2; ++n) {
    if (euler_phi(n) > dg) continue;
    const double theta = 2 * std::numbers::pi / n;
    if (std::abs(evaluate(g, std::polar(1.0, theta))) > 1e-8 * norm1) continue;
    const RationalPoly phi = to_rational(cyclotomic(n));
    unsigned mult = 0;
    for (;;) {
      auto dm = divmod(rest, phi);
      if (!dm.remainder.is_zero()) break;
      rest = std::move(dm.quotient);
      ++mult;
    }
    if (mult) out.factors.emplace_back(n, mult);
  }
  if (low) rest = rest * RationalPoly::monomial(1, low);
  out.rest = std::move(rest);
  return out;
}

std::complex<double> evaluate(const RationalPoly& p, std::complex<double> z) {
  std::complex<double> acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

}  // namespace mahler
