#include <cmath>

#include "doctest.h"
#include "mahler/asymptotics.hpp"
#include "mahler/families.hpp"
#include "mahler/measure.hpp"
#include "mahler/parse.hpp"

using namespace mahler;

namespace {

double mid(const Interval& i) { return i.mid().to_double(); }

// Contour integrals evaluated independently with mpmath at 30 digits.
constexpr double kF1p3 = 0.076276618858140256651;
constexpr double kF2p3 = 0.028113460946588626801;
constexpr double kF2p7 = 0.00014116707396306422;
constexpr double kF1p5 = -0.0241888933426768254103713999108;
constexpr double kF2p5 = 0.00299375026898444303584196469864;
constexpr double kmQ3 = 0.096150928618999612;
constexpr double km3 = 0.161297155633;

}  // namespace

TEST_SUITE("F_ell") {
  TEST_CASE("bounds are exact rationals") {
    CHECK(F_ell_bound(3, 1) == mpq_class(2, 9));
    CHECK(F_ell_bound(3, 2) == mpq_class(10, 81));
    CHECK(F_ell_bound(7, 1) == mpq_class(20, 2401));
    CHECK(F_ell_bound(3, 1) == epsilon_p(3));
    CHECK(F_ell_bound(7, 1) == epsilon_p(7));
  }

  TEST_CASE("closed form reference values") {
    Interval f = F_ell_closed(3, 1);
    CHECK(std::abs(mid(f) - kF1p3) < 1e-16);
    CHECK(f.width().to_double() < 1e-30);
    CHECK(std::abs(mid(F_ell_closed(3, 2)) - kF2p3) < 1e-16);
    CHECK(std::abs(mid(F_ell_closed(7, 2)) - kF2p7) < 1e-18);
    // N even: the sign follows (-1)^(lN), not (-1)^l
    CHECK(std::abs(mid(F_ell_closed(5, 1)) - kF1p5) < 1e-16);
    CHECK(std::abs(mid(F_ell_closed(5, 2)) - kF2p5) < 1e-16);
  }

  TEST_CASE("single term for p = 3, l = 1") {
    const QuadraticRoots r = qp_roots(3, 128);
    Interval expect = -Interval(3L, 128) / ((r.alpha2 - r.alpha1) * r.alpha2 * r.alpha2);
    CHECK(F_ell_closed(3, 1).overlaps(expect));
  }

  TEST_CASE("closed form agrees with quadrature") {
    for (long p : {3L, 5L, 7L, 11L, 13L})
      for (unsigned ell : {1U, 2U, 3U}) {
        CAPTURE(p);
        CAPTURE(ell);
        const double closed = mid(F_ell_closed(p, ell));
        const double quad = F_ell_quadrature(p, ell, 4096).to_double();
        CHECK(std::abs(closed - quad) <= 1e-10);
      }
    CHECK(std::abs(F_ell_quadrature(3, 1, 2048).to_double() - kF1p3) < 1e-15);
  }

  TEST_CASE("bound soundness") {
    for (long p : {3L, 7L, 11L})
      for (unsigned ell : {1U, 2U, 3U}) {
        const Interval f = abs(F_ell_closed(p, ell));
        CHECK(f.hi() <= BigFloat(F_ell_bound(p, ell), 128, MPFR_RNDD));
      }
    const double q19 = F_ell_quadrature(19, 1, 1024).to_double();
    CHECK(std::abs(q19) <= F_ell_bound(19, 1).get_d());
    CHECK(F_ell_bound(19, 1) == mpq_class(binomial(18, 9), mpz_class("6131066257801")));
    CHECK(F_ell_bound(19, 1) == epsilon_p(19));
  }

  TEST_CASE("ratio bound dominates every later exact ratio") {
    for (long p : {3L, 5L, 7L, 11L}) {
      std::vector<mpq_class> b;
      for (unsigned ell = 1; ell <= 121; ++ell) b.push_back(F_ell_bound(p, ell));
      for (unsigned ell0 : {1U, 2U, 5U, 20U, 60U}) {
        const mpq_class r = F_ell_bound_ratio(p, ell0);
        for (unsigned ell = ell0; ell < 120; ++ell) CHECK(b[ell] / b[ell - 1] <= r);
      }
    }
    CHECK(F_ell_bound_ratio(3, 1000) < 1);
  }

  TEST_CASE("argument checks") {
    CHECK_THROWS_AS(F_ell_closed(4, 1), DomainError);
    CHECK_THROWS_AS(F_ell_closed(3, 0), DomainError);
    CHECK_THROWS_AS(F_ell_quadrature(3, 1, 32), DomainError);
  }
}

TEST_SUITE("correction_series") {
  TEST_CASE("p = 3") {
    SeriesResult s = correction_series(3, 1e-12);
    CHECK(s.converged);
    CHECK(s.tail_bound < mpq_class(1e-12));
    CHECK(s.value.width().to_double() < 1e-11);
    CHECK(std::abs(mid(s.value) - (km3 - kmQ3)) < 1e-11);
  }

  TEST_CASE("p = 19 is within epsilon_19") {
    SeriesResult s = correction_series(19, 1e-30);
    CHECK(std::abs(mid(s.value)) <= epsilon_p(19).get_d());
  }

  TEST_CASE("consistency with measured m_p for odd p <= 50") {
    for (long p = 3; p <= 50; p += 2) {
      CAPTURE(p);
      const SeriesResult s = correction_series(p, 1e-14);
      const Interval diff = log_mahler(make_family(Family::f, p), 1e-14).log_measure - m_qp_closed(p, 128);
      CHECK(s.value.overlaps(diff));
      CHECK(s.value.width().to_double() < 1e-13);
    }
  }

  TEST_CASE("partial result without convergence") {
    SeriesResult s = correction_series(3, 1e-40, 128, 20);
    CHECK_FALSE(s.converged);
    CHECK(s.terms_used == 20);
    CHECK(s.tail_bound > 0);
  }
}

TEST_SUITE("bounds and monotonicity") {
  TEST_CASE("|m_p - m(Q_p)| <= epsilon_p for odd primes up to 100") {
    for (long p = 3; p <= 100; p += 2) {
      if (!is_prime(p)) continue;
      CAPTURE(p);
      const mpq_class eps = epsilon_p(p);
      const double tol = eps.get_d() / 16;
      const Interval diff = log_mahler(make_family(Family::f, p), tol).log_measure - m_qp_closed(p, 512);
      CHECK(abs(diff).hi() <= BigFloat(eps, 512, MPFR_RNDD));
    }
  }

  TEST_CASE("monotonicity up to 7 with listed values") {
    MonotonicityReport r = verify_monotonicity(7, 1e-10);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.strictly_decreasing);
    CHECK(std::floor(mid(r.rows[0].m_p) * 1e5) == 16129);
    CHECK(std::floor(mid(r.rows[1].m_p) * 1e5) == 4920);
    CHECK(std::floor(mid(r.rows[2].m_p) * 1e5) == 2145);
    CHECK_FALSE(r.rows[0].sufficient.has_value());
    CHECK_FALSE(r.rows[1].sufficient.has_value());
    // the sufficient inequality is false at p = 7: 0.011480 < 0.013308
    REQUIRE(r.rows[2].sufficient.has_value());
    CHECK_FALSE(*r.rows[2].sufficient);
  }

  TEST_CASE("strict decrease for odd p up to 99") {
    MonotonicityReport r = verify_monotonicity(99, 1e-10, 4);
    CHECK(r.rows.size() == 49);
    CHECK(r.strictly_decreasing);
    CHECK_FALSE(r.offending.has_value());
    for (const auto& row : r.rows) {
      CAPTURE(row.p);
      if (row.p < 7) CHECK_FALSE(row.sufficient.has_value());
      else if (row.p == 7) CHECK(row.sufficient == std::optional<bool>(false));
      else CHECK(row.sufficient == std::optional<bool>(true));
    }
    CHECK_FALSE(r.sufficient_inequality);
  }

  TEST_CASE("sufficient inequality fails at p = 3, 5 and 7") {
    // strict decrease there rests on the certified values of m_3, m_5, m_7, m_9
    for (long p : {3L, 5L, 7L}) {
      const Interval left = m_qp_closed(p, 128) - Interval(epsilon_p(p), 128);
      const Interval right = m_qp_closed(p + 2, 128) + Interval(epsilon_p(p + 2), 128);
      CHECK_FALSE(right.hi() < left.lo());
    }
  }

  TEST_CASE("binomial identity") {
    CHECK(binomial_identity_check(1, 1));
    CHECK(binomial_identity_check(2, 3));
    CHECK(binomial_identity_check(1, 9));
    for (unsigned ell = 1; ell <= 12; ++ell)
      for (unsigned N = 1; N <= 12; ++N) CHECK(binomial_identity_check(ell, N));
  }
}

TEST_SUITE("zudlem_check") {
  TEST_CASE("N = 1 is an identity") {
    ZudlemResult r = zudlem_check(make_family(Family::Q, 3), 1, 1e-8);
    CHECK(r.lhs == r.rhs);
    CHECK(r.pass);
  }

  TEST_CASE("examples") {
    CHECK(zudlem_check(make_family(Family::Q, 3), 3, 1e-8).pass);
    CHECK(zudlem_check(parse_poly("x+2"), 2, 1e-8).pass);
  }

  TEST_CASE("grid including non-family polynomials") {
    for (const char* s : {"x+2", "x-3", "2x^2+5", "x^2/5 + x - 1/5", "3x^3-x+4"})
      for (unsigned N : {1U, 2U, 3U, 4U}) {
        CAPTURE(s);
        CAPTURE(N);
        ZudlemResult r = zudlem_check(parse_poly(s), N, 1e-8);
        CHECK(r.pass);
      }
  }

  TEST_CASE("connects the two sides of the m_p identity") {
    // N m(1 + 1/(x Q_p(x^N))) = m_p - m(Q_p) scaled by N
    const long p = 7;
    ZudlemResult r = zudlem_check(make_family(Family::Q, p), 3, 1e-10);
    const double expected = 3 * mid(correction_series(p, 1e-14).value);
    CHECK(std::abs(r.rhs.to_double() - expected) < 1e-9);
  }
}
