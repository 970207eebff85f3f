#pragma once

// Dense univariate polynomials over Q and Z.
//
// Coefficients are stored in ascending degree order (coeffs()[k] multiplies
// x^k).  The zero polynomial is the empty sequence and has degree
// Degree::minus_infinity().

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mahler/errors.hpp"

namespace mahler {

class Degree {
 public:
  constexpr Degree(std::size_t d) noexcept : value_(d), finite_(true) {}  // NOLINT

  static constexpr Degree minus_infinity() noexcept {
    Degree d(0);
    d.finite_ = false;
    return d;
  }

  constexpr bool is_minus_infinity() const noexcept { return !finite_; }

  std::size_t value() const {
    if (!finite_) throw DomainError("degree of the zero polynomial is -infinity");
    return value_;
  }

  friend constexpr bool operator==(Degree a, Degree b) noexcept {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::less;
    if (!b.finite_) return std::strong_ordering::greater;
    return a.value_ <=> b.value_;
  }

  friend constexpr Degree operator+(Degree a, Degree b) noexcept {
    if (!a.finite_ || !b.finite_) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }

 private:
  std::size_t value_;
  bool finite_;
};

namespace detail {
inline void canonicalize(mpq_class& q) { q.canonicalize(); }
inline void canonicalize(mpz_class&) {}
}  // namespace detail

template <class Scalar>
class Poly {
 public:
  using scalar_type = Scalar;

  Poly() = default;

  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { normalize(); }

  Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(Scalar c) { return Poly(std::vector<Scalar>{std::move(c)}); }

  static Poly monomial(Scalar c, std::size_t k) {
    std::vector<Scalar> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  static Poly x() { return monomial(Scalar(1), 1); }

  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::size_t size() const noexcept { return c_.size(); }

  Degree degree() const noexcept {
    return c_.empty() ? Degree::minus_infinity() : Degree(c_.size() - 1);
  }

  const Scalar& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }

  /// Exact Horner evaluation.
  Scalar operator()(const Scalar& at) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
  }

  Poly& operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    normalize();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }

  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void normalize() {
    for (auto& c : c_) detail::canonicalize(c);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using RationalPoly = Poly<mpq_class>;
using IntPoly = Poly<mpz_class>;

/// Integer coordinates of an integer-valued polynomial in the basis
/// binom(x, 0), binom(x, 1), ...
struct BinomialPoly {
  std::vector<mpz_class> coords;

  RationalPoly to_rational() const;

  /// nullopt when P is not integer-valued.
  static std::optional<BinomialPoly> from_rational(const RationalPoly& p);

  friend bool operator==(const BinomialPoly&, const BinomialPoly&) = default;
};

RationalPoly to_rational(const IntPoly& p);

/// x^d P(1/x).  Throws DomainError on the zero polynomial.
template <class Scalar>
Poly<Scalar> reciprocal(const Poly<Scalar>& p) {
  if (p.is_zero()) throw DomainError("reciprocal of the zero polynomial");
  std::vector<Scalar> c(p.coeffs().rbegin(), p.coeffs().rend());
  return Poly<Scalar>(std::move(c));
}

/// P(x^k).
template <class Scalar>
Poly<Scalar> compose_power(const Poly<Scalar>& p, std::size_t k) {
  if (k == 0) throw DomainError("compose_power needs k >= 1");
  if (p.is_zero()) return p;
  std::vector<Scalar> c((p.size() - 1) * k + 1);
  for (std::size_t i = 0; i < p.size(); ++i) c[i * k] = p.coeffs()[i];
  return Poly<Scalar>(std::move(c));
}

template <class Scalar>
Poly<Scalar> pow(Poly<Scalar> base, unsigned n) {
  Poly<Scalar> r = Poly<Scalar>::constant(Scalar(1));
  while (n) {
    if (n & 1U) r *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return r;
}

/// P(-x).
template <class Scalar>
Poly<Scalar> reflect(const Poly<Scalar>& p) {
  std::vector<Scalar> c = p.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return Poly<Scalar>(std::move(c));
}

// ---- binomial basis -------------------------------------------------------

/// coords[k] = k-th forward difference of P at 0, so P = sum coords[k] binom(x,k).
std::vector<mpq_class> to_binomial_basis(const RationalPoly& p);
RationalPoly from_binomial_basis(std::span<const mpq_class> coords);
RationalPoly from_binomial_basis(std::span<const mpz_class> coords);

/// binom(x, k) as a polynomial.
RationalPoly binomial_poly(std::size_t k);

bool is_integer_valued(const RationalPoly& p);

// ---- content / primitive part ---------------------------------------------

struct PrimitiveDecomposition {
  mpq_class content;
  IntPoly primitive;  // gcd of coefficients 1, positive leading coefficient
};

/// P = content * primitive.
PrimitiveDecomposition primitive_int(const RationalPoly& p);

mpz_class content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

// ---- division, gcd, resultant ---------------------------------------------

template <class Scalar>
struct DivMod {
  Poly<Scalar> quotient;
  Poly<Scalar> remainder;
};

DivMod<mpq_class> divmod(const RationalPoly& a, const RationalPoly& b);

/// a / b when b divides a exactly in Z[x].
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Monic gcd.  gcd(0, 0) is rejected.
RationalPoly poly_gcd(const RationalPoly& a, const RationalPoly& b);
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);  // primitive, positive lc

mpz_class resultant(const IntPoly& a, const IntPoly& b);
mpq_class resultant(const RationalPoly& a, const RationalPoly& b);

/// Yun decomposition: P = lc(P) * prod f_i^{m_i} with monic squarefree,
/// pairwise coprime f_i.  Constant P gives an empty list.
std::vector<std::pair<RationalPoly, unsigned>> squarefree_decomposition(const RationalPoly& p);

// ---- cyclotomic factors ---------------------------------------------------

/// The n-th cyclotomic polynomial (cached).
const IntPoly& cyclotomic(unsigned n);

struct CyclotomicSplit {
  RationalPoly rest;                                  // P with Phi_n factors removed
  std::vector<std::pair<unsigned, unsigned>> factors; // (n, multiplicity)
};

/// Divides out every cyclotomic factor of P exactly.
CyclotomicSplit split_cyclotomic(const RationalPoly& p);

// ---- floating evaluation --------------------------------------------------

std::complex<double> evaluate(const RationalPoly& p, std::complex<double> z);

}  // namespace mahler
