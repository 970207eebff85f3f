#pragma once

// Large-p behaviour of m_p = m(f_p).
//
// With N = (p-1)/2 and Q_p(x) = (x^2 - 1)/p + x,
//   m_p - m(Q_p) = (1/N) Re sum_{l>=1} ((-1)^(lN-1) / l) F_l,
//   F_l = (1/2 pi i) \oint_{|z|=1} dz / (z^(l+1) Q_p(z)^(lN)),
// and |F_l| <= binom(2lN + l - 1, lN) / p^(l(N+1)).

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mahler/bigfloat.hpp"
#include "mahler/poly.hpp"

namespace mahler {

/// Residue formula for F_l with interval enclosures of the zeros of Q_p.
Interval F_ell_closed(long p, unsigned ell, Precision prec = kDefaultPrecision);

/// Trapezoidal rule for the contour integral; n_points >= 64.
BigFloat F_ell_quadrature(long p, unsigned ell, std::size_t n_points, Precision prec = kDefaultPrecision);

/// binom(2 l N + l - 1, l N) / p^(l (N+1)).
mpq_class F_ell_bound(long p, unsigned ell);

/// Upper bound on F_ell_bound(p, l+1) / F_ell_bound(p, l) valid for every l >= ell0.
mpq_class F_ell_bound_ratio(long p, unsigned ell0);

struct SeriesResult {
  Interval value;      // encloses m_p - m(Q_p), widened by tail_bound
  unsigned terms_used = 0;
  mpq_class tail_bound;  // >= sum over l > terms_used of F_ell_bound / l
  long p = 0;
  bool converged = false;
};

/// Sums the correction series until the certified tail drops below tol.
/// When max_terms is reached first the partial result has converged = false.
SeriesResult correction_series(long p, double tol, Precision prec = kDefaultPrecision, unsigned max_terms = 5000);

struct ZudlemResult {
  BigFloat lhs;  // m(1 + (-1)^(N+1) / (x P(x)^N))
  BigFloat rhs;  // N m(1 + 1 / (x P(x^N)))
  bool pass = false;
  std::size_t n_points = 0;
};

/// Both sides by circle quadrature of numerator and denominator.  Throws
/// UnitCircleRootError when a zero sits on or too near |z| = 1.
ZudlemResult zudlem_check(const RationalPoly& p, unsigned N, double tol, Precision prec = kDefaultPrecision);

/// sum_{j<lN} binom(2lN-2-j, lN-1) binom(l+j, j) == ((p-1)/(p+1)) binom(2lN+l-1, lN), p = 2N+1.
bool binomial_identity_check(unsigned ell, unsigned N);

struct MonotonicityRow {
  long p = 0;
  Interval m_p;
  Interval m_q;  // m(Q_p)
  mpq_class epsilon;
  std::optional<bool> decreasing;   // upper(m_{p+2}) < lower(m_p); absent for the last row
  std::optional<bool> sufficient;   // m(Q_p) - eps_p > m(Q_{p+2}) + eps_{p+2}; p >= 7 only
};

struct MonotonicityReport {
  std::vector<MonotonicityRow> rows;
  bool strictly_decreasing = true;
  bool sufficient_inequality = true;
  std::optional<std::pair<long, long>> offending;
};

/// One row of the |m_p - m(Q_p)| <= eps_p report.
struct BoundRow {
  long p = 0;
  bool prime = true;
  Interval M_p;         // M(f_p)
  Interval m_p;         // m(f_p)
  Interval m_q;         // m(Q_p), closed form
  mpq_class epsilon;
  Interval difference;  // m_p - m(Q_p)
  Interval correction;  // correction series
  bool bound_holds = false;         // |difference| <= eps_p
  bool series_consistent = false;   // correction overlaps difference
};

/// The measure is computed at min(tol, eps_p / 16) so the bound is decidable.
BoundRow bound_row(long p, double tol);

/// Odd p from 3 to p_max.
std::vector<BoundRow> bound_report(long p_max, double tol, unsigned threads = 1);

/// Odd p from 3 to p_max.  Overlapping intervals are retried once at
/// tol / 1000 before being reported as offending.
MonotonicityReport verify_monotonicity(long p_max, double tol, unsigned threads = 1);

}  // namespace mahler
