#pragma once

// Thin RAII layer over MPFR: a multiprecision float, a directed-rounding
// real interval, and a round-to-nearest complex number.

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace mahler {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;

class BigFloat {
 public:
  explicit BigFloat(Precision prec = kDefaultPrecision) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double d, Precision prec) : BigFloat(prec) { mpfr_set_d(v_, d, MPFR_RNDN); }
  BigFloat(long n, Precision prec) : BigFloat(prec) { mpfr_set_si(v_, n, MPFR_RNDN); }
  BigFloat(const mpz_class& z, Precision prec, mpfr_rnd_t rnd = MPFR_RNDN) : BigFloat(prec) {
    mpfr_set_z(v_, z.get_mpz_t(), rnd);
  }
  BigFloat(const mpq_class& q, Precision prec, mpfr_rnd_t rnd = MPFR_RNDN) : BigFloat(prec) {
    mpfr_set_q(v_, q.get_mpq_t(), rnd);
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  Precision precision() const noexcept { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20, mpfr_rnd_t rnd = MPFR_RNDN) const;

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator-(BigFloat a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pi(Precision prec);

/// Closed interval [lo, hi] with outward-rounded arithmetic.
class Interval {
 public:
  explicit Interval(Precision prec = kDefaultPrecision) : lo_(prec), hi_(prec) {}
  Interval(BigFloat lo, BigFloat hi);
  Interval(const mpq_class& q, Precision prec);  // tightest enclosure of q
  Interval(long n, Precision prec) : lo_(n, prec), hi_(n, prec) {}

  const BigFloat& lo() const noexcept { return lo_; }
  const BigFloat& hi() const noexcept { return hi_; }
  Precision precision() const noexcept { return lo_.precision(); }

  BigFloat width() const;  // rounded up
  BigFloat mid() const;
  BigFloat radius() const;  // rounded up half-width

  bool contains(const BigFloat& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool overlaps(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  /// Every element strictly below every element of o.
  bool certainly_less(const Interval& o) const { return hi_ < o.lo_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);  // throws if b contains 0
  friend Interval operator-(const Interval& a);

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

 private:
  BigFloat lo_, hi_;
};

Interval sqrt(const Interval& x);  // requires lo >= 0
Interval log(const Interval& x);   // requires lo > 0
Interval pow(const Interval& x, unsigned n);
Interval abs(const Interval& x);
Interval max(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
/// [lo - r, hi + r].
Interval widen(const Interval& x, const BigFloat& r);

/// Round-to-nearest complex number; used by the iterative root solver.
struct Complex {
  BigFloat re, im;

  explicit Complex(Precision prec = kDefaultPrecision) : re(prec), im(prec) {}
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  Precision precision() const noexcept { return re.precision(); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const BigFloat& s);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
};

/// |z| rounded in direction rnd.
BigFloat abs(const Complex& z, mpfr_rnd_t rnd = MPFR_RNDN);
/// e^{i theta}.
Complex unit(const BigFloat& theta);

}  // namespace mahler
