#include "mahler/measure.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <numeric>
#include <optional>

namespace mahler {

namespace {

using cd = std::complex<double>;

// ---- double-precision Aberth seed -----------------------------------------

/// P(z) / P'(z), evaluated on the reversed polynomial outside the unit disk
/// so that large |z| does not overflow.
cd newton_ratio(const std::vector<double>& a, cd z) {
  const std::size_t n = a.size() - 1;
  if (std::abs(z) <= 1.0) {
    cd p = a[n], dp = 0;
    for (std::size_t k = n; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + a[k];
    }
    return p / dp;
  }
  const cd y = 1.0 / z;
  cd r = a[0], dr = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    dr = dr * y + r;
    r = r * y + a[k];
  }
  return z * r / (static_cast<double>(n) * r - y * dr);
}

std::vector<cd> aberth_double(const std::vector<double>& a) {
  const std::size_t n = a.size() - 1;
  // Fujiwara bound on the root moduli.
  double bound = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    double ratio = std::abs(a[n - k] / a[n]);
    if (k == n) ratio /= 2;
    bound = std::max(bound, std::pow(ratio, 1.0 / static_cast<double>(k)));
  }
  bound = 2 * bound;
  if (!(bound > 0) || !std::isfinite(bound)) bound = 1;

  std::vector<cd> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    const double radius = bound * (1.0 + 0.01 * std::sin(static_cast<double>(k) + 1.0));
    z[k] = std::polar(radius, theta);
  }
  for (int it = 0; it < 2000; ++it) {
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const cd ratio = newton_ratio(a, z[i]);
      if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) continue;
      cd s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      const cd w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-14) break;
  }
  return z;
}

// ---- multiprecision refinement and certification --------------------------

Complex to_complex(cd z, Precision prec) {
  return Complex(BigFloat(z.real(), prec), BigFloat(z.imag(), prec));
}

Complex rescale(const Complex& z, Precision prec) {
  Complex r(prec);
  mpfr_set(r.re.get(), z.re.get(), MPFR_RNDN);
  mpfr_set(r.im.get(), z.im.get(), MPFR_RNDN);
  return r;
}

/// Squarefree integer polynomial of degree >= 2 whose roots are tracked
/// across precision levels.
class SquarefreeSolver {
 public:
  explicit SquarefreeSolver(IntPoly g) : g_(std::move(g)), n_(g_.degree().value()) {
    std::vector<double> a;
    a.reserve(g_.size());
    for (const auto& c : g_.coeffs()) a.push_back(c.get_d());
    for (const cd& z : aberth_double(a)) seed_.push_back(z);
  }

  /// Certified disks at prec.  `isolated` is false when some disks had to
  /// be merged into a cluster.
  std::vector<RootEstimate> solve(Precision prec, bool& isolated) {
    if (z_.empty()) {
      for (const cd& z : seed_) z_.push_back(to_complex(z, prec));
    } else if (z_.front().precision() != prec) {
      for (auto& z : z_) z = rescale(z, prec);
    }
    polish(prec);
    return certify(prec, isolated);
  }

 private:
  void horner(const Complex& z, Complex& p, Complex& dp, Precision prec) const {
    p = Complex(BigFloat(g_.coeffs()[n_], prec), BigFloat(prec));
    dp = Complex(prec);
    for (std::size_t k = n_; k-- > 0;) {
      dp *= z;
      dp += p;
      p *= z;
      mpfr_add_z(p.re.get(), p.re.get(), g_.coeffs()[k].get_mpz_t(), MPFR_RNDN);
    }
  }

  void polish(Precision prec) {
    const BigFloat one(1L, prec);
    BigFloat threshold(1L, prec);
    mpfr_div_2si(threshold.get(), threshold.get(), static_cast<long>(prec) - 12, MPFR_RNDN);
    Complex p(prec), dp(prec), s(prec), d(prec), w(prec);
    for (int it = 0; it < 200; ++it) {
      BigFloat worst(0L, prec);
      for (std::size_t i = 0; i < n_; ++i) {
        horner(z_[i], p, dp, prec);
        if (dp.re.is_zero() && dp.im.is_zero()) continue;
        Complex ratio = p / dp;
        s = Complex(prec);
        for (std::size_t j = 0; j < n_; ++j) {
          if (j == i) continue;
          d = z_[i] - z_[j];
          if (d.re.is_zero() && d.im.is_zero()) continue;
          s += Complex(one, BigFloat(prec)) / d;
        }
        Complex den = Complex(one, BigFloat(prec)) - ratio * s;
        if (den.re.is_zero() && den.im.is_zero()) continue;
        w = ratio / den;
        z_[i] -= w;
        BigFloat mag = abs(z_[i]);
        if (mag < one) mag = one;
        BigFloat rel = abs(w) / mag;
        if (rel > worst) worst = rel;
      }
      if (worst < threshold) break;
    }
  }

  std::vector<RootEstimate> certify(Precision prec, bool& isolated) const {
    // Gerschgorin / Weierstrass inclusion: with W_i = P(z_i) / (lc prod_{j!=i}(z_i - z_j)),
    // every connected component of k disks D(z_i, n|W_i|) holds exactly k roots.
    const double nd = static_cast<double>(n_);
    BigFloat unit_round(1L, prec);
    mpfr_div_2si(unit_round.get(), unit_round.get(), static_cast<long>(prec), MPFR_RNDU);
    BigFloat eval_factor(4 * nd + 10, prec), prod_factor(1L, prec), inflate(1L, prec);
    mpfr_mul(eval_factor.get(), eval_factor.get(), unit_round.get(), MPFR_RNDU);
    {
      BigFloat t(3 * nd + 4, prec);
      mpfr_mul(t.get(), t.get(), unit_round.get(), MPFR_RNDU);
      mpfr_sub(prod_factor.get(), prod_factor.get(), t.get(), MPFR_RNDD);
      BigFloat u(16L, prec);
      mpfr_mul(u.get(), u.get(), unit_round.get(), MPFR_RNDU);
      mpfr_add(inflate.get(), inflate.get(), u.get(), MPFR_RNDU);
    }
    BigFloat lead(g_.leading(), prec, MPFR_RNDD);
    mpfr_abs(lead.get(), lead.get(), MPFR_RNDD);

    std::vector<BigFloat> radius;
    radius.reserve(n_);
    Complex p(prec), dp(prec);
    for (std::size_t i = 0; i < n_; ++i) {
      horner(z_[i], p, dp, prec);
      // sum |a_k| |z|^k, rounded up
      BigFloat mag = abs(z_[i], MPFR_RNDU);
      BigFloat absum(prec), t(prec);
      for (std::size_t k = n_ + 1; k-- > 0;) {
        mpfr_mul(absum.get(), absum.get(), mag.get(), MPFR_RNDU);
        mpfr_set_z(t.get(), g_.coeffs()[k].get_mpz_t(), MPFR_RNDU);
        mpfr_abs(t.get(), t.get(), MPFR_RNDU);
        mpfr_add(absum.get(), absum.get(), t.get(), MPFR_RNDU);
      }
      BigFloat num = abs(p, MPFR_RNDU);
      mpfr_mul(t.get(), absum.get(), eval_factor.get(), MPFR_RNDU);
      mpfr_add(num.get(), num.get(), t.get(), MPFR_RNDU);

      BigFloat den = lead;
      for (std::size_t j = 0; j < n_; ++j) {
        if (j == i) continue;
        Complex d = z_[i] - z_[j];
        BigFloat dist = abs(d, MPFR_RNDD);
        mpfr_mul(den.get(), den.get(), dist.get(), MPFR_RNDD);
      }
      mpfr_mul(den.get(), den.get(), prod_factor.get(), MPFR_RNDD);

      BigFloat r(prec);
      if (den.sign() <= 0) {
        mpfr_set_inf(r.get(), 1);
      } else {
        mpfr_div(r.get(), num.get(), den.get(), MPFR_RNDU);
        mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n_), MPFR_RNDU);
        mpfr_mul(r.get(), r.get(), inflate.get(), MPFR_RNDU);
      }
      radius.push_back(std::move(r));
    }

    // Union-find over overlapping disks.
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        BigFloat dist = abs(z_[i] - z_[j], MPFR_RNDD);
        BigFloat reach(prec);
        mpfr_add(reach.get(), radius[i].get(), radius[j].get(), MPFR_RNDU);
        if (dist <= reach) parent[find(i)] = find(j);
      }

    std::vector<RootEstimate> out;
    isolated = true;
    std::vector<std::vector<std::size_t>> groups(n_);
    for (std::size_t i = 0; i < n_; ++i) groups[find(i)].push_back(i);
    for (const auto& grp : groups) {
      if (grp.empty()) continue;
      if (grp.size() == 1) {
        out.push_back(RootEstimate{z_[grp[0]], radius[grp[0]], 1});
        continue;
      }
      isolated = false;
      Complex c(prec);
      for (std::size_t i : grp) c += z_[i];
      const BigFloat count(static_cast<long>(grp.size()), prec);
      c.re /= count;
      c.im /= count;
      BigFloat r(prec);
      for (std::size_t i : grp) {
        BigFloat reach = abs(z_[i] - c, MPFR_RNDU);
        mpfr_add(reach.get(), reach.get(), radius[i].get(), MPFR_RNDU);
        if (reach > r) r = reach;
      }
      out.push_back(RootEstimate{c, r, static_cast<unsigned>(grp.size())});
    }
    return out;
  }

  IntPoly g_;
  std::size_t n_;
  std::vector<cd> seed_;
  std::vector<Complex> z_;
};

/// Roots of a nonzero polynomial: x^k part, then every squarefree factor.
class RootEngine {
 public:
  explicit RootEngine(const RationalPoly& p) {
    if (p.is_zero()) throw DomainError("roots of the zero polynomial");
    if (p.degree() == Degree(0)) throw DomainError("roots of a constant polynomial");
    while (p.coeffs()[zero_mult_] == 0) ++zero_mult_;
    RationalPoly core(std::vector<mpq_class>(p.coeffs().begin() + static_cast<long>(zero_mult_), p.coeffs().end()));
    if (core.degree() == Degree(0)) return;
    for (auto& [f, m] : squarefree_decomposition(core)) {
      Part part;
      part.mult = m;
      IntPoly g = primitive_int(f).primitive;
      if (g.degree() == Degree(1)) {
        mpq_class root(-g.coeffs()[0], g.coeffs()[1]);
        root.canonicalize();
        part.linear_root = root;
      } else {
        part.solver = std::make_unique<SquarefreeSolver>(std::move(g));
      }
      parts_.push_back(std::move(part));
    }
  }

  RootSet at(Precision prec, bool& isolated, BigFloat& max_radius) {
    RootSet rs;
    rs.precision_bits = prec;
    isolated = true;
    max_radius = BigFloat(0L, prec);
    if (zero_mult_)
      rs.roots.push_back(RootEstimate{Complex(prec), BigFloat(0L, prec), static_cast<unsigned>(zero_mult_)});
    for (auto& part : parts_) {
      if (part.linear_root) {
        BigFloat lo(*part.linear_root, prec, MPFR_RNDD), hi(*part.linear_root, prec, MPFR_RNDU);
        BigFloat r(prec);
        mpfr_sub(r.get(), hi.get(), lo.get(), MPFR_RNDU);
        if (r > max_radius) max_radius = r;
        rs.roots.push_back(RootEstimate{Complex(lo, BigFloat(prec)), std::move(r), part.mult});
        continue;
      }
      bool iso = true;
      for (auto& est : part.solver->solve(prec, iso)) {
        if (est.radius > max_radius) max_radius = est.radius;
        est.multiplicity *= part.mult;
        rs.roots.push_back(std::move(est));
      }
      isolated = isolated && iso;
    }
    return rs;
  }

 private:
  struct Part {
    unsigned mult = 1;
    std::optional<mpq_class> linear_root;
    std::unique_ptr<SquarefreeSolver> solver;
  };
  std::size_t zero_mult_ = 0;
  std::vector<Part> parts_;
};

Interval modulus(const RootEstimate& r) {
  return widen(Interval(abs(r.center, MPFR_RNDD), abs(r.center, MPFR_RNDU)), r.radius);
}

}  // namespace

unsigned RootSet::total_multiplicity() const {
  unsigned s = 0;
  for (const auto& r : roots) s += r.multiplicity;
  return s;
}

RootSet find_roots(const RationalPoly& p, double tol, RootOptions opts) {
  RootEngine engine(p);
  for (Precision prec = opts.start_bits;; prec *= 2) {
    bool isolated = true;
    BigFloat max_radius;
    RootSet rs = engine.at(prec, isolated, max_radius);
    if (isolated && max_radius.to_double() <= tol) return rs;
    if (prec * 2 > opts.max_bits)
      throw ConvergenceError("root isolation did not converge by " + std::to_string(prec) + " bits",
                             max_radius.to_double());
  }
}

MeasureResult measure_from_roots(const RationalPoly& p, const RootSet& roots) {
  const Precision prec = roots.precision_bits;
  Interval m = abs(Interval(p.leading(), prec));
  const Interval one(1L, prec);
  for (const auto& r : roots.roots) m *= pow(max(one, modulus(r)), r.multiplicity);
  MeasureResult res{m, log(m), MeasureMethod::root_product, prec};
  return res;
}

MeasureResult mahler_measure(const RationalPoly& p, double tol, RootOptions opts) {
  if (p.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  if (p.degree() == Degree(0)) {
    const Interval c = abs(Interval(p.leading(), opts.start_bits));
    return MeasureResult{c, log(c), MeasureMethod::root_product, opts.start_bits};
  }
  RootEngine engine(p);
  for (Precision prec = opts.start_bits;; prec *= 2) {
    bool isolated = true;
    BigFloat max_radius;
    RootSet rs = engine.at(prec, isolated, max_radius);
    MeasureResult res = measure_from_roots(p, rs);
    const double w = res.measure.width().to_double();
    const double lw = res.log_measure.width().to_double();
    if (w <= tol && lw <= tol) return res;
    if (prec * 2 > opts.max_bits)
      throw ConvergenceError("measure interval wider than tolerance at " + std::to_string(prec) + " bits",
                             std::max(w, lw));
  }
}

MeasureResult log_mahler(const RationalPoly& p, double tol, RootOptions opts) {
  return mahler_measure(p, tol, opts);
}

bool has_unit_circle_root(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("unit-circle test of the zero polynomial");
  CyclotomicSplit split = split_cyclotomic(p);
  if (!split.factors.empty()) return true;
  RationalPoly rest = split.rest;
  std::size_t low = 0;
  while (rest.coeffs()[low] == 0) ++low;
  rest = RationalPoly(std::vector<mpq_class>(rest.coeffs().begin() + static_cast<long>(low), rest.coeffs().end()));
  if (rest.degree() == Degree(0)) return false;
  RationalPoly g = poly_gcd(rest, reciprocal(rest));
  if (g.degree() == Degree(0)) return false;
  RootSet rs = find_roots(g, 1e-30);
  const Interval one(1L, rs.precision_bits);
  for (const auto& r : rs.roots)
    if (modulus(r).contains(one.lo())) return true;
  return false;
}

JensenEstimate jensen_estimate(const RationalPoly& p, std::size_t n_points, Precision prec) {
  if (p.is_zero()) throw DomainError("Jensen quadrature of the zero polynomial");
  if (n_points < 16) throw DomainError("jensen_quadrature needs at least 16 nodes");
  CyclotomicSplit split = split_cyclotomic(p);
  RationalPoly rest = split.rest;
  std::size_t low = 0;
  while (rest.coeffs()[low] == 0) ++low;
  rest = RationalPoly(std::vector<mpq_class>(rest.coeffs().begin() + static_cast<long>(low), rest.coeffs().end()));
  if (rest.degree() > Degree(0) && has_unit_circle_root(rest))
    throw UnitCircleRootError(
        "polynomial has a non-cyclotomic root on the unit circle; Jensen quadrature is ill-posed");

  std::vector<BigFloat> c;
  c.reserve(rest.size());
  for (const auto& q : rest.coeffs()) c.emplace_back(q, prec);

  const BigFloat two_pi = pi(prec) * BigFloat(2L, prec);
  const BigFloat nn(static_cast<long>(n_points), prec);
  BigFloat sum_all(0L, prec), sum_even(0L, prec), t(prec);
  for (std::size_t k = 0; k < n_points; ++k) {
    const BigFloat theta = two_pi * BigFloat(static_cast<long>(k), prec) / nn;
    const Complex z = unit(theta);
    Complex v(c.back(), BigFloat(prec));
    for (std::size_t j = c.size() - 1; j-- > 0;) {
      v *= z;
      v.re += c[j];
    }
    BigFloat mag = abs(v);
    if (mag.is_zero()) throw UnitCircleRootError("quadrature node hit a root of the polynomial");
    mpfr_log(t.get(), mag.get(), MPFR_RNDN);
    sum_all += t;
    if (k % 2 == 0) sum_even += t;
  }
  return JensenEstimate{sum_all / nn, sum_even / BigFloat(static_cast<long>(n_points / 2), prec)};
}

BigFloat jensen_quadrature(const RationalPoly& p, std::size_t n_points, Precision prec) {
  JensenEstimate e = jensen_estimate(p, n_points, prec);
  if (std::abs((e.value - e.half_grid).to_double()) > 1e-6)
    throw UnitCircleRootError(
        "quadrature not converged: a root is numerically indistinguishable from the unit circle "
        "at this node count");
  return std::move(e.value);
}

std::optional<bool> measure_is_exactly_one(const RationalPoly& p) {
  if (p.is_zero()) throw DomainError("measure of the zero polynomial");
  CyclotomicSplit split = split_cyclotomic(p);
  RationalPoly rest = split.rest;
  std::size_t low = 0;
  while (rest.coeffs()[low] == 0) ++low;
  rest = RationalPoly(std::vector<mpq_class>(rest.coeffs().begin() + static_cast<long>(low), rest.coeffs().end()));
  if (rest.degree() == Degree(0)) return abs(rest.leading()) == 1;

  RootSet rs = find_roots(rest, 1e-30);
  const BigFloat one(1L, rs.precision_bits);
  bool all_out = true, all_in = true;
  for (const auto& r : rs.roots) {
    const Interval mod = modulus(r);
    if (!(mod.lo() > one)) all_out = false;
    if (!(mod.hi() < one)) all_in = false;
  }
  if (all_out) return abs(rest.coeffs()[0]) == 1;
  if (all_in) return abs(rest.leading()) == 1;
  const MeasureResult m = measure_from_roots(rest, rs);
  if (!m.measure.contains(one)) return false;
  return std::nullopt;
}

}  // namespace mahler
