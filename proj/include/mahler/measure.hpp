#pragma once

// Certified complex roots and Mahler measure intervals.
//
// M(P) = |lc(P)| * prod max(1, |alpha_j|) over the complex roots of P, and
// m(P) = log M(P) = mean of log|P| over the unit circle (Jensen).

#include <cstddef>
#include <vector>

#include "mahler/bigfloat.hpp"
#include "mahler/poly.hpp"

namespace mahler {

/// The closed disk (center, radius) holds exactly `multiplicity` roots
/// counted with multiplicity.
struct RootEstimate {
  Complex center;
  BigFloat radius;
  unsigned multiplicity = 1;
};

struct RootSet {
  std::vector<RootEstimate> roots;
  Precision precision_bits = kDefaultPrecision;

  unsigned total_multiplicity() const;
};

struct RootOptions {
  Precision start_bits = kDefaultPrecision;
  Precision max_bits = 8192;
};

/// All complex roots of P with radius <= tol.  Repeated roots are reported
/// once with their multiplicity.  Throws DomainError for degree < 1 and
/// ConvergenceError when max_bits is not enough.
RootSet find_roots(const RationalPoly& p, double tol, RootOptions opts = {});

enum class MeasureMethod { root_product, jensen_quadrature };

struct MeasureResult {
  Interval measure;      // encloses M(P)
  Interval log_measure;  // encloses m(P)
  MeasureMethod method = MeasureMethod::root_product;
  Precision precision_bits = kDefaultPrecision;

  const BigFloat& lower() const { return measure.lo(); }
  const BigFloat& upper() const { return measure.hi(); }
  const BigFloat& log_lower() const { return log_measure.lo(); }
  const BigFloat& log_upper() const { return log_measure.hi(); }
};

/// Interval of width <= tol (for both M and m) around the Mahler measure.
MeasureResult mahler_measure(const RationalPoly& p, double tol, RootOptions opts = {});

/// Same computation; named for call sites that care about m(P).
MeasureResult log_mahler(const RationalPoly& p, double tol, RootOptions opts = {});

/// M(P) from an already certified root set.
MeasureResult measure_from_roots(const RationalPoly& p, const RootSet& roots);

/// Trapezoidal rule for the mean of log|P(e^{i theta})| with n_points nodes.
/// Powers of x and exact cyclotomic factors are removed first (they
/// contribute 0).  Throws UnitCircleRootError when a root remains on or
/// numerically at the circle, DomainError for n_points < 16 or P = 0.
BigFloat jensen_quadrature(const RationalPoly& p, std::size_t n_points, Precision prec);

/// The same sum on n_points nodes and on every second node, without the
/// convergence check; callers choose their own stopping rule.
struct JensenEstimate {
  BigFloat value;
  BigFloat half_grid;
};
JensenEstimate jensen_estimate(const RationalPoly& p, std::size_t n_points, Precision prec);

/// Exact test: does P vanish somewhere on |z| = 1?  Decided through
/// cyclotomic division and certified roots of gcd(P, reciprocal(P)).
bool has_unit_circle_root(const RationalPoly& p);

/// Whether M(P) == 1 exactly, decided from certified root positions and
/// exact leading/constant coefficients.  nullopt when undecidable this way
/// (roots on both sides of the circle).
std::optional<bool> measure_is_exactly_one(const RationalPoly& p);

}  // namespace mahler
