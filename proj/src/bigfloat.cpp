#include "mahler/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <stdexcept>

#include "mahler/errors.hpp"

namespace mahler {

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
  char* buf = nullptr;
  const char fmt_rnd = rnd == MPFR_RNDD ? 'D' : rnd == MPFR_RNDU ? 'U' : 'N';
  const std::string fmt = std::string("%.*R") + fmt_rnd + "e";
  if (mpfr_asprintf(&buf, fmt.c_str(), std::max(digits - 1, 0), v_) < 0)
    throw std::runtime_error("mpfr_asprintf failed");
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pi(Precision prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

// ---- Interval -------------------------------------------------------------

namespace {

Precision prec_of(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

BigFloat min4(BigFloat a, const BigFloat& b, const BigFloat& c, const BigFloat& d) {
  if (b < a) a = b;
  if (c < a) a = c;
  if (d < a) a = d;
  return a;
}

BigFloat max4(BigFloat a, const BigFloat& b, const BigFloat& c, const BigFloat& d) {
  if (b > a) a = b;
  if (c > a) a = c;
  if (d > a) a = d;
  return a;
}

}  // namespace

Interval::Interval(BigFloat lo, BigFloat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw DomainError("interval with lo > hi");
}

Interval::Interval(const mpq_class& q, Precision prec)
    : lo_(q, prec, MPFR_RNDD), hi_(q, prec, MPFR_RNDU) {}

BigFloat Interval::width() const {
  BigFloat w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

BigFloat Interval::mid() const {
  BigFloat m(precision() + 1);
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

BigFloat Interval::radius() const {
  BigFloat w = width();
  mpfr_div_2ui(w.get(), w.get(), 1, MPFR_RNDU);
  return w;
}

Interval operator+(const Interval& a, const Interval& b) {
  const Precision p = prec_of(a, b);
  BigFloat lo(p), hi(p);
  mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Interval operator-(const Interval& a, const Interval& b) {
  const Precision p = prec_of(a, b);
  BigFloat lo(p), hi(p);
  mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Interval operator-(const Interval& a) {
  BigFloat lo(a.precision()), hi(a.precision());
  mpfr_neg(lo.get(), a.hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo_.get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Interval operator*(const Interval& a, const Interval& b) {
  const Precision p = prec_of(a, b);
  BigFloat d[4] = {BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  BigFloat u[4] = {BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  const BigFloat* xs[2] = {&a.lo_, &a.hi_};
  const BigFloat* ys[2] = {&b.lo_, &b.hi_};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(d[2 * i + j].get(), xs[i]->get(), ys[j]->get(), MPFR_RNDD);
      mpfr_mul(u[2 * i + j].get(), xs[i]->get(), ys[j]->get(), MPFR_RNDU);
    }
  return {min4(d[0], d[1], d[2], d[3]), max4(u[0], u[1], u[2], u[3])};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing 0");
  const Precision p = prec_of(a, b);
  BigFloat d[4] = {BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  BigFloat u[4] = {BigFloat(p), BigFloat(p), BigFloat(p), BigFloat(p)};
  const BigFloat* xs[2] = {&a.lo_, &a.hi_};
  const BigFloat* ys[2] = {&b.lo_, &b.hi_};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mpfr_div(d[2 * i + j].get(), xs[i]->get(), ys[j]->get(), MPFR_RNDD);
      mpfr_div(u[2 * i + j].get(), xs[i]->get(), ys[j]->get(), MPFR_RNDU);
    }
  return {min4(d[0], d[1], d[2], d[3]), max4(u[0], u[1], u[2], u[3])};
}

Interval sqrt(const Interval& x) {
  if (x.lo().sign() < 0) throw DomainError("sqrt of an interval reaching below 0");
  BigFloat lo(x.precision()), hi(x.precision());
  mpfr_sqrt(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), x.hi().get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Interval log(const Interval& x) {
  if (x.lo().sign() <= 0) throw DomainError("log of an interval reaching 0");
  BigFloat lo(x.precision()), hi(x.precision());
  mpfr_log(lo.get(), x.lo().get(), MPFR_RNDD);
  mpfr_log(hi.get(), x.hi().get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

Interval abs(const Interval& x) {
  if (x.lo().sign() >= 0) return x;
  if (x.hi().sign() <= 0) return -x;
  BigFloat hi = abs(x.lo());
  if (x.hi() > hi) hi = x.hi();
  return {BigFloat(0L, x.precision()), std::move(hi)};
}

Interval pow(const Interval& x, unsigned n) {
  Interval r(1L, x.precision());
  if (n % 2 == 0) {
    Interval a = abs(x);
    for (unsigned i = 0; i < n; ++i) r = r * a;
    return r;
  }
  for (unsigned i = 0; i < n; ++i) r = r * x;
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  return {a.lo() > b.lo() ? a.lo() : b.lo(), a.hi() > b.hi() ? a.hi() : b.hi()};
}

Interval hull(const Interval& a, const Interval& b) {
  return {a.lo() < b.lo() ? a.lo() : b.lo(), a.hi() > b.hi() ? a.hi() : b.hi()};
}

Interval widen(const Interval& x, const BigFloat& r) {
  BigFloat lo(x.precision()), hi(x.precision());
  mpfr_sub(lo.get(), x.lo().get(), r.get(), MPFR_RNDD);
  mpfr_add(hi.get(), x.hi().get(), r.get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

// ---- Complex --------------------------------------------------------------

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  const Precision p = precision();
  BigFloat t1(p), t2(p), r(p), i(p);
  mpfr_mul(t1.get(), re.get(), o.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), im.get(), o.im.get(), MPFR_RNDN);
  mpfr_sub(r.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), re.get(), o.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), im.get(), o.re.get(), MPFR_RNDN);
  mpfr_add(i.get(), t1.get(), t2.get(), MPFR_RNDN);
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Precision p = precision();
  BigFloat den(p), t(p);
  mpfr_sqr(den.get(), o.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), o.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);
  Complex conj(o.re, -o.im);
  *this *= conj;
  re /= den;
  im /= den;
  return *this;
}

Complex& Complex::operator*=(const BigFloat& s) {
  re *= s;
  im *= s;
  return *this;
}

BigFloat abs(const Complex& z, mpfr_rnd_t rnd) {
  BigFloat r(z.precision());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), rnd);
  return r;
}

Complex unit(const BigFloat& theta) {
  Complex z(theta.precision());
  mpfr_sin_cos(z.im.get(), z.re.get(), theta.get(), MPFR_RNDN);
  return z;
}

}  // namespace mahler
