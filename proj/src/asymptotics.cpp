#include "mahler/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "mahler/families.hpp"
#include "mahler/measure.hpp"

namespace mahler {
namespace {

void check_p(long p) {
  if (p < 3 || p % 2 == 0) throw DomainError("p must be odd and >= 3, got " + std::to_string(p));
}

mpz_class ipow(long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

Complex cpow(Complex base, unsigned long e) {
  Complex r(BigFloat(1L, base.precision()), BigFloat(base.precision()));
  while (e) {
    if (e & 1UL) r *= base;
    e >>= 1UL;
    if (e) base *= base;
  }
  return r;
}

Interval interval_of(const mpz_class& z, Precision prec) { return Interval(mpq_class(z), prec); }

RationalPoly x_times(const RationalPoly& p) { return RationalPoly::x() * p; }

BigFloat adaptive_jensen(const RationalPoly& p, double tol, Precision prec, std::size_t& n_used) {
  for (std::size_t n = 1024; n <= (1U << 17); n *= 2) {
    JensenEstimate e = jensen_estimate(p, n, prec);
    if (std::abs((e.value - e.half_grid).to_double()) <= tol / 8) {
      n_used = std::max(n_used, n);
      return std::move(e.value);
    }
  }
  throw UnitCircleRootError("circle quadrature did not settle: a zero lies too close to |z| = 1");
}

// Strided split of [0, n) over the workers; the first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1U, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

Interval F_ell_closed(long p, unsigned ell, Precision prec) {
  check_p(p);
  if (ell == 0) throw DomainError("F_ell needs ell >= 1");
  const unsigned long N = static_cast<unsigned long>((p - 1) / 2);
  const unsigned long lN = ell * N;
  const QuadraticRoots roots = qp_roots(p, prec);
  const Interval d = roots.alpha2 - roots.alpha1;
  const Interval one(1L, prec);
  const Interval inv_d = one / d, inv_a = one / roots.alpha2;
  const Interval ratio = d / roots.alpha2;
  // running = (alpha2 - alpha1)^-(2lN-1-j) * alpha2^-(l+1+j)
  Interval running = pow(inv_d, static_cast<unsigned>(2 * lN - 1)) * pow(inv_a, ell + 1);
  Interval sum(0L, prec);
  for (unsigned long j = 0; j < lN; ++j) {
    const mpz_class c = binomial(2 * lN - 2 - j, lN - 1) * binomial(ell + j, j);
    sum += interval_of(c, prec) * running;
    running *= ratio;
  }
  // residue sign: the two local expansions contribute (-1)^(lN-1) together
  Interval f = interval_of(ipow(p, lN), prec) * sum;
  return lN % 2 == 1 ? -f : f;
}

BigFloat F_ell_quadrature(long p, unsigned ell, std::size_t n_points, Precision prec) {
  check_p(p);
  if (ell == 0) throw DomainError("F_ell needs ell >= 1");
  if (n_points < 64) throw DomainError("F_ell_quadrature needs at least 64 nodes");
  const unsigned long N = static_cast<unsigned long>((p - 1) / 2);
  const BigFloat inv_p = BigFloat(1L, prec) / BigFloat(p, prec);
  const BigFloat one(1L, prec);
  const BigFloat two_pi = pi(prec) * BigFloat(2L, prec);
  const BigFloat nn(static_cast<long>(n_points), prec);
  BigFloat sum(0L, prec);
  for (std::size_t k = 0; k < n_points; ++k) {
    const Complex z = unit(two_pi * BigFloat(static_cast<long>(k), prec) / nn);
    Complex q = z * z;
    q.re -= one;
    q *= inv_p;
    q += z;
    Complex denom = cpow(z, ell) * cpow(q, ell * N);
    Complex v(one, BigFloat(prec));
    v /= denom;
    sum += v.re;
  }
  return sum / nn;
}

mpq_class F_ell_bound(long p, unsigned ell) {
  check_p(p);
  if (ell == 0) throw DomainError("F_ell needs ell >= 1");
  const unsigned long N = static_cast<unsigned long>((p - 1) / 2);
  mpq_class r(binomial(2 * ell * N + ell - 1, ell * N), ipow(p, ell * (N + 1)));
  r.canonicalize();
  return r;
}

mpq_class F_ell_bound_ratio(long p, unsigned ell0) {
  check_p(p);
  if (ell0 == 0) throw DomainError("ratio needs ell0 >= 1");
  // bound(l+1)/bound(l) = p^-(N+1) prod_{i<=N} (M+i)/(K+i) prod_{i<=N+1} (M+N+i)/(M-K+i)
  // with M = (2N+1)l - 1, K = lN.  Factors of the first product increase to
  // (2N+1)/N, those of the second decrease in l, so l = ell0 bounds them.
  const long N = (p - 1) / 2;
  const long l = static_cast<long>(ell0);
  const long M = (2 * N + 1) * l - 1, K = l * N;
  mpq_class r(mpz_class(1), ipow(p, static_cast<unsigned long>(N + 1)));
  for (long i = 1; i <= N; ++i) r *= mpq_class(2 * N + 1, N);
  for (long i = 1; i <= N + 1; ++i) r *= mpq_class(M + N + i, M - K + i);
  r.canonicalize();
  return r;
}

SeriesResult correction_series(long p, double tol, Precision prec, unsigned max_terms) {
  check_p(p);
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const long N = (p - 1) / 2;
  const mpq_class target(tol);
  SeriesResult out;
  out.p = p;
  Interval sum(0L, prec);
  for (unsigned ell = 1; ell <= max_terms; ++ell) {
    Interval term = F_ell_closed(p, ell, prec) / Interval(static_cast<long>(ell), prec);
    const bool negative = ((static_cast<long>(ell) * N - 1) % 2) != 0;
    sum += negative ? -term : term;
    out.terms_used = ell;
    const mpq_class ratio = F_ell_bound_ratio(p, ell + 1);
    if (ratio >= 1) continue;
    out.tail_bound = F_ell_bound(p, ell + 1) / (mpq_class(ell + 1) * (1 - ratio));
    out.tail_bound.canonicalize();
    if (out.tail_bound < target) {
      out.converged = true;
      break;
    }
  }
  if (!out.converged && out.tail_bound == 0)
    throw ConvergenceError("no certified tail bound within " + std::to_string(max_terms) + " terms", 0);
  sum = sum / Interval(N, prec);
  out.value = widen(sum, BigFloat(out.tail_bound, prec, MPFR_RNDU));
  return out;
}

ZudlemResult zudlem_check(const RationalPoly& p, unsigned N, double tol, Precision prec) {
  if (N == 0) throw DomainError("zudlem_check needs N >= 1");
  if (p.is_zero()) throw DomainError("zudlem_check of the zero polynomial");
  const RationalPoly sign = RationalPoly::constant(N % 2 == 1 ? 1 : -1);
  const RationalPoly left_den = x_times(pow(p, N));
  const RationalPoly right_den = x_times(compose_power(p, N));
  ZudlemResult r;
  r.lhs = adaptive_jensen(left_den + sign, tol, prec, r.n_points) - adaptive_jensen(left_den, tol, prec, r.n_points);
  const BigFloat right = adaptive_jensen(right_den + RationalPoly::constant(1), tol, prec, r.n_points) -
                         adaptive_jensen(right_den, tol, prec, r.n_points);
  r.rhs = right * BigFloat(static_cast<long>(N), prec);
  r.pass = std::abs((r.lhs - r.rhs).to_double()) <= tol;
  return r;
}

bool binomial_identity_check(unsigned ell, unsigned N) {
  if (ell == 0 || N == 0) throw DomainError("binomial_identity_check needs ell, N >= 1");
  const unsigned long lN = static_cast<unsigned long>(ell) * N;
  mpz_class lhs = 0;
  for (unsigned long j = 0; j < lN; ++j) lhs += binomial(2 * lN - 2 - j, lN - 1) * binomial(ell + j, j);
  const long p = 2 * static_cast<long>(N) + 1;
  mpq_class rhs = mpq_class(p - 1, p + 1) * mpq_class(binomial(2 * lN + ell - 1, lN));
  rhs.canonicalize();
  return mpq_class(lhs) == rhs;
}

BoundRow bound_row(long p, double tol) {
  check_p(p);
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const Precision prec = 256;
  BoundRow row;
  row.p = p;
  row.prime = is_prime(p);
  row.epsilon = epsilon_p(p);
  const double t = std::min(tol, row.epsilon.get_d() / 16);
  const MeasureResult m = log_mahler(make_family(Family::f, p), t);
  row.M_p = m.measure;
  row.m_p = m.log_measure;
  row.m_q = m_qp_closed(p, prec);
  row.difference = row.m_p - row.m_q;
  row.correction = correction_series(p, t, prec).value;
  row.bound_holds = abs(row.difference).hi() <= BigFloat(row.epsilon, prec, MPFR_RNDD);
  row.series_consistent = row.correction.overlaps(row.difference);
  return row;
}

std::vector<BoundRow> bound_report(long p_max, double tol, unsigned threads) {
  if (p_max < 3) throw DomainError("bound_report needs p_max >= 3");
  std::vector<BoundRow> rows((p_max - 1) / 2);
  parallel_for(rows.size(), threads, [&](std::size_t i) { rows[i] = bound_row(3 + 2 * static_cast<long>(i), tol); });
  return rows;
}

MonotonicityReport verify_monotonicity(long p_max, double tol, unsigned threads) {
  if (p_max < 3) throw DomainError("verify_monotonicity needs p_max >= 3");
  const Precision prec = 256;
  std::vector<long> ps;
  for (long p = 3; p <= p_max; p += 2) ps.push_back(p);

  MonotonicityReport rep;
  rep.rows.resize(ps.size());
  auto fill = [&](std::size_t i) {
    MonotonicityRow& row = rep.rows[i];
    row.p = ps[i];
    row.m_p = log_mahler(make_family(Family::f, ps[i]), tol).log_measure;
    row.m_q = m_qp_closed(ps[i], prec);
    row.epsilon = epsilon_p(ps[i]);
  };
  parallel_for(ps.size(), threads, fill);

  for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    auto& cur = rep.rows[i];
    auto& next = rep.rows[i + 1];
    bool ok = next.m_p.hi() < cur.m_p.lo();
    if (!ok) {
      cur.m_p = log_mahler(make_family(Family::f, cur.p), tol / 1000).log_measure;
      next.m_p = log_mahler(make_family(Family::f, next.p), tol / 1000).log_measure;
      ok = next.m_p.hi() < cur.m_p.lo();
    }
    cur.decreasing = ok;
    if (!ok && !rep.offending) rep.offending = std::make_pair(cur.p, next.p);
    rep.strictly_decreasing = rep.strictly_decreasing && ok;
  }
  for (auto& row : rep.rows) {
    if (row.p < 7) continue;
    const long q = row.p + 2;
    const Interval left = row.m_q - Interval(row.epsilon, prec);
    const Interval right = m_qp_closed(q, prec) + Interval(epsilon_p(q), prec);
    row.sufficient = right.hi() < left.lo();
    rep.sufficient_inequality = rep.sufficient_inequality && *row.sufficient;
  }
  return rep;
}

}  // namespace mahler
