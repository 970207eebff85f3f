#include <cmath>
#include <random>

#include "doctest.h"
#include "mahler/families.hpp"
#include "mahler/measure.hpp"
#include "mahler/parse.hpp"
#include "test_support.hpp"

using namespace mahler;

namespace {

RationalPoly P(const char* s) { return parse_poly(s); }

double mid(const Interval& i) { return i.mid().to_double(); }

// References computed independently with mpmath.polyroots at 40 digits.
constexpr double kMf3 = 1.17503408494305;
constexpr double kMf7 = 1.02169013068;
constexpr double kmf3 = 0.161297155633;
constexpr double kmf7 = 0.0214582468597;
constexpr double kLehmer = 1.1762808182599175;

}  // namespace

TEST_SUITE("find_roots") {
  TEST_CASE("x^2 + 1") {
    RootSet rs = find_roots(P("x^2+1"), 1e-20);
    REQUIRE(rs.roots.size() == 2);
    for (const auto& r : rs.roots) {
      CHECK(std::abs(r.center.re.to_double()) < 1e-20);
      CHECK(std::abs(std::abs(r.center.im.to_double()) - 1) < 1e-20);
      CHECK(r.radius.to_double() <= 1e-20);
    }
  }

  TEST_CASE("f*_3 has one real root near -3.51 and a pair inside the unit circle") {
    RootSet rs = find_roots(make_family(Family::fstar, 3), 1e-15);
    REQUIRE(rs.roots.size() == 3);
    int outside = 0;
    double product = 1;
    for (const auto& r : rs.roots) {
      double mod = abs(r.center).to_double();
      product *= mod;
      if (mod > 1) {
        ++outside;
        CHECK(r.center.re.to_double() > -4);
        CHECK(r.center.re.to_double() < -3);
        CHECK(std::abs(r.center.im.to_double()) < 1e-15);
      }
    }
    CHECK(outside == 1);
    CHECK(product == doctest::Approx(3.0).epsilon(1e-12));
  }

  TEST_CASE("Lehmer polynomial has exactly one root outside") {
    RootSet rs = find_roots(lehmer_polynomial(), 1e-20);
    CHECK(rs.total_multiplicity() == 10);
    int outside = 0;
    for (const auto& r : rs.roots) {
      if (abs(r.center).to_double() > 1 + 1e-12) {
        ++outside;
        CHECK(r.center.re.to_double() == doctest::Approx(1.176280818).epsilon(1e-9));
      }
    }
    CHECK(outside == 1);
  }

  TEST_CASE("multiplicities are reported") {
    RootSet rs = find_roots(P("x^2") * P("x-1") * P("x-1") * P("x-1") * P("x^2+x+7"), 1e-20);
    CHECK(rs.total_multiplicity() == 7);
  }

  TEST_CASE("degree zero is rejected") {
    CHECK_THROWS_AS(find_roots(P("5"), 1e-10), DomainError);
    CHECK_THROWS_AS(find_roots(RationalPoly(), 1e-10), DomainError);
  }

  TEST_CASE("deterministic") {
    RootSet a = find_roots(make_family(Family::f, 11), 1e-20);
    RootSet b = find_roots(make_family(Family::f, 11), 1e-20);
    REQUIRE(a.roots.size() == b.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
      CHECK(a.roots[i].center.re == b.roots[i].center.re);
      CHECK(a.roots[i].center.im == b.roots[i].center.im);
    }
  }
}

TEST_SUITE("mahler_measure") {
  TEST_CASE("linear and constant") {
    auto m = mahler_measure(P("x-2"), 1e-12);
    CHECK(m.measure.contains(BigFloat(2L, 128)));
    CHECK(m.measure.width().to_double() <= 1e-12);
    auto c = mahler_measure(P("-3/4"), 1e-12);
    CHECK(mid(c.measure) == doctest::Approx(0.75));
    CHECK(log_mahler(P("x"), 1e-12).log_measure.contains(BigFloat(0L, 128)));
  }

  TEST_CASE("table values for f_p") {
    auto m3 = mahler_measure(make_family(Family::f, 3), 1e-10);
    CHECK(mid(m3.measure) == doctest::Approx(kMf3).epsilon(1e-11));
    CHECK(mid(m3.log_measure) == doctest::Approx(kmf3).epsilon(1e-10));
    auto m7 = log_mahler(make_family(Family::f, 7), 1e-10);
    CHECK(mid(m7.measure) == doctest::Approx(kMf7).epsilon(1e-10));
    CHECK(mid(m7.log_measure) == doctest::Approx(kmf7).epsilon(1e-9));
  }

  TEST_CASE("reducible (x^p - x)/p has measure 1/p") {
    for (long p : {3L, 5L, 7L}) {
      RationalPoly a = (RationalPoly::monomial(1, p) - RationalPoly::monomial(1, 1)) * mpq_class(1, p);
      auto m = mahler_measure(a, 1e-12);
      CHECK(m.measure.contains(BigFloat(mpq_class(1, p), 200)) );
      CHECK(m.measure.width().to_double() <= 1e-12);
    }
  }

  TEST_CASE("Lehmer constant") {
    auto m = mahler_measure(lehmer_polynomial(), 1e-15);
    CHECK(std::abs(mid(m.measure) - kLehmer) < 1e-14);
  }

  TEST_CASE("zero polynomial is rejected") { CHECK_THROWS_AS(mahler_measure(RationalPoly(), 1e-6), DomainError); }

  TEST_CASE("bounded below by |a_0| and |a_d|") {
    std::mt19937_64 rng(123);
    for (int i = 0; i < 60; ++i) {
      auto a = mahler::testing::random_rational_poly(rng, 1 + rng() % 12, 9, 5);
      auto m = mahler_measure(a, 1e-9);
      const double lo = m.lower().to_double();
      CHECK(lo >= std::abs(a.coeffs()[0].get_d()) - 1e-9);
      CHECK(lo >= std::abs(a.leading().get_d()) - 1e-9);
    }
  }
}

TEST_SUITE("measure invariants") {
  TEST_CASE("multiplicativity") {
    std::mt19937_64 rng(4242);
    const double tol = 1e-10;
    for (int i = 0; i < 40; ++i) {
      auto a = mahler::testing::random_rational_poly(rng, 1 + rng() % 10, 9, 3);
      auto b = mahler::testing::random_rational_poly(rng, 1 + rng() % 10, 9, 3);
      auto ma = mahler_measure(a, tol), mb = mahler_measure(b, tol), mab = mahler_measure(a * b, tol);
      const double prod = mid(ma.measure) * mid(mb.measure);
      const double slack = 3 * tol * std::max(1.0, prod);
      CHECK(mab.lower().to_double() - slack <= prod);
      CHECK(prod <= mab.upper().to_double() + slack);
    }
  }

  TEST_CASE("reciprocal invariance") {
    std::mt19937_64 rng(8080);
    for (int i = 0; i < 40; ++i) {
      auto a = mahler::testing::random_rational_poly(rng, 1 + rng() % 12, 9, 3);
      if (a.coeffs()[0] == 0) continue;
      auto m1 = mahler_measure(a, 1e-10), m2 = mahler_measure(reciprocal(a), 1e-10);
      CHECK(mid(m1.measure) == doctest::Approx(mid(m2.measure)).epsilon(1e-9));
    }
  }

  TEST_CASE("M(P(x^k)) = M(P(x))") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 15; ++i) {
      auto a = mahler::testing::random_rational_poly(rng, 1 + rng() % 6, 9, 3);
      const double base = mid(mahler_measure(a, 1e-10).measure);
      for (std::size_t k : {2U, 3U, 5U})
        CHECK(mid(mahler_measure(compose_power(a, k), 1e-10).measure) ==
              doctest::Approx(base).epsilon(1e-9));
    }
  }

  TEST_CASE("g_p has measure 1") {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
      auto m = mahler_measure(make_family(Family::g, p), 1e-12);
      CHECK(m.measure.contains(BigFloat(1L, 128)));
      CHECK(m.measure.width().to_double() <= 1e-12);
      CHECK(measure_is_exactly_one(make_family(Family::g, p)) == std::optional<bool>(true));
    }
  }

  TEST_CASE("exact measure-one decisions") {
    CHECK(measure_is_exactly_one(P("x^2+x+1")) == std::optional<bool>(true));
    CHECK(measure_is_exactly_one(make_family(Family::f, 3)) == std::optional<bool>(false));
    CHECK(measure_is_exactly_one(P("2x-1")) == std::optional<bool>(false));
  }
}

TEST_SUITE("jensen_quadrature") {
  TEST_CASE("x - 2") {
    BigFloat j = jensen_quadrature(P("x-2"), 1024, 128);
    CHECK(std::abs(j.to_double() - std::log(2.0)) < 1e-12);
  }

  TEST_CASE("f_3 agrees with the root product") {
    BigFloat j = jensen_quadrature(make_family(Family::f, 3), 4096, 128);
    CHECK(std::abs(j.to_double() - kmf3) < 1e-11);
  }

  TEST_CASE("g_5 has log measure 0") {
    BigFloat j = jensen_quadrature(make_family(Family::g, 5), 4096, 128);
    CHECK(std::abs(j.to_double()) < 1e-8);
  }

  TEST_CASE("cyclotomic factors are removed before quadrature") {
    BigFloat j = jensen_quadrature(P("x^5/5 - x/5"), 256, 128);
    CHECK(std::abs(j.to_double() + std::log(5.0)) < 1e-12);
  }

  TEST_CASE("non-cyclotomic unit-circle root is rejected") {
    // 5x^2 - 6x + 5 has both roots on |z| = 1 (product 1, complex pair).
    CHECK(has_unit_circle_root(P("5x^2-6x+5")));
    CHECK_THROWS_AS(jensen_quadrature(P("5x^2-6x+5"), 1024, 128), UnitCircleRootError);
    CHECK_FALSE(has_unit_circle_root(make_family(Family::f, 7)));
  }

  TEST_CASE("too few nodes") { CHECK_THROWS_AS(jensen_quadrature(P("x-2"), 8, 128), DomainError); }

  TEST_CASE("oracle agreement on random integer polynomials") {
    std::mt19937_64 rng(1729);
    const double tol = 1e-10;
    int compared = 0;
    while (compared < 100) {
      IntPoly a = mahler::testing::random_int_poly(rng, 1 + rng() % 20, 6);
      RationalPoly r = to_rational(a);
      if (has_unit_circle_root(r)) continue;
      // keep roots a little away from the circle so 8192 nodes converge
      RootSet rs = find_roots(r, 1e-20);
      bool near = false;
      for (const auto& root : rs.roots) near = near || std::abs(abs(root.center).to_double() - 1) < 0.02;
      if (near) continue;
      auto m = log_mahler(r, tol);
      BigFloat j = jensen_quadrature(r, 8192, 128);
      CHECK(std::abs(j.to_double() - mid(m.log_measure)) <= 10 * tol);
      ++compared;
    }
  }
}
