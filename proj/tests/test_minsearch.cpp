#include <cmath>

#include "doctest.h"
#include "mahler/irreducibility.hpp"
#include "mahler/minsearch.hpp"
#include "mahler/parse.hpp"

using namespace mahler;

namespace {

BinomialPoly coords(std::initializer_list<long> c) {
  BinomialPoly b;
  for (long x : c) b.coords.emplace_back(x);
  return b;
}

double mid(const Interval& i) { return i.mid().to_double(); }

// Brute force over the same box in double precision (numpy roots).
constexpr double kMinD3B5 = 1.0283369473613542;

}  // namespace

TEST_SUITE("candidate box") {
  TEST_CASE("counts B (2B+1)^d") {
    CHECK(CandidateBox(1, 3).size() == 21);
    CHECK(CandidateBox(2, 2).size() == 50);
    CHECK(CandidateBox(3, 5).size() == 6655);
    CHECK(enumerate_candidates(2, 2).size() == 50);
  }

  TEST_CASE("lexicographic order with unique entries") {
    const auto all = enumerate_candidates(2, 2);
    CHECK(all.front() == coords({-2, -2, 1}));
    CHECK(all.back() == coords({2, 2, 2}));
    for (std::size_t i = 1; i < all.size(); ++i) {
      std::vector<long> a, b;
      for (const auto& z : all[i - 1].coords) a.push_back(z.get_si());
      for (const auto& z : all[i].coords) b.push_back(z.get_si());
      CHECK(a < b);
    }
  }

  TEST_CASE("index round trip") {
    const CandidateBox box(3, 4);
    for (std::uint64_t i = 0; i < box.size(); i += 37) CHECK(box.index_of(box.at(i)) == i);
    CHECK_FALSE(box.index_of(coords({0, 0, 0, 5})).has_value());
    CHECK_FALSE(box.index_of(coords({0, 0, 0, 0})).has_value());
    CHECK_FALSE(box.index_of(coords({0, 0, 1})).has_value());
  }

  TEST_CASE("the Q_3 coordinates are in the d = 3, B = 5 box") {
    CHECK(CandidateBox(3, 5).index_of(coords({-1, 0, 3, 4})).has_value());
    const RationalPoly q = coords({-1, 0, 3, 4}).to_rational();
    CHECK(q == parse_poly("2/3 x^3 - 1/2 x^2 - 1/6 x - 1"));
  }

  TEST_CASE("mirror is an involution and matches P(-x)") {
    CHECK(mirror(coords({-1, 0, 3, 4})) == coords({1, 1, 5, 4}));
    const auto all = enumerate_candidates(3, 2);
    for (const auto& c : all) {
      const BinomialPoly m = mirror(c);
      CHECK(mirror(m) == c);
      RationalPoly r = m.to_rational();
      if (c.coords.size() % 2 == 0) r = -r;
      CHECK(r == reflect(c.to_rational()));
    }
  }

  TEST_CASE("invalid boxes") {
    CHECK_THROWS_AS(CandidateBox(0, 3), DomainError);
    CHECK_THROWS_AS(CandidateBox(2, -1), DomainError);
    CHECK(CandidateBox(2, 0).size() == 0);
    CHECK_THROWS_AS(CandidateBox(40, 1000), DomainError);
  }
}

TEST_SUITE("search_min_measure") {
  TEST_CASE("empty box") {
    const SearchRecord r = search_min_measure(2, 0, 1e-10);
    CHECK_FALSE(r.found());
    CHECK(r.candidates_scanned == 0);
  }

  TEST_CASE("degree 1: minimum 2") {
    const SearchRecord r = search_min_measure(1, 3, 1e-10);
    REQUIRE(r.found());
    CHECK(std::abs(mid(*r.best_measure) - 2.0) < 1e-10);
    CHECK(r.candidates_scanned == 21);
    CHECK(r.below_one_count == 0);
    // c_0 + c_1 x has M = max(|c_0|, |c_1|), so M = 1 exactly for |c_0|, c_1 <= 1
    CHECK(r.measure_one_count > 0);
  }

  TEST_CASE("degree 3, B = 5 finds Q_3") {
    const SearchRecord r = search_min_measure(3, 5, 1e-12);
    REQUIRE(r.found());
    CHECK(std::abs(mid(*r.best_measure) - kMinD3B5) < 1e-12);
    CHECK(std::floor(mid(*r.best_measure) * 1e5) == 102833);
    CHECK(mid(*r.best_measure) < 1.17503);
    const BinomialPoly& b = *r.best_poly;
    CHECK((b == coords({-1, 0, 3, 4}) || b == coords({1, 1, 5, 4})));
    CHECK(b == coords({-1, 0, 3, 4}));
    CHECK(r.below_one_count == 0);
    CHECK(r.ambiguous_count == 0);
    CHECK(r.inconclusive_count == 0);
    CHECK(r.candidates_scanned == 6655);
    CHECK(r.symmetry_skipped + r.reducible_count + r.irreducible_count + r.inconclusive_count ==
          r.candidates_scanned);
  }

  TEST_CASE("same result for every worker count") {
    const SearchRecord a = search_min_measure(3, 3, 1e-10, {1, 64});
    for (unsigned t : {2U, 3U, 8U}) {
      const SearchRecord b = search_min_measure(3, 3, 1e-10, {t, 64});
      CHECK(b.best_poly == a.best_poly);
      CHECK(b.best_index == a.best_index);
      CHECK(b.irreducible_count == a.irreducible_count);
      CHECK(b.reducible_count == a.reducible_count);
      CHECK(b.measure_one_count == a.measure_one_count);
    }
    const SearchRecord c = search_min_measure(3, 3, 1e-10, {4, 1000});
    CHECK(c.best_poly == a.best_poly);
  }

  TEST_CASE("minimum is non-increasing in B") {
    for (unsigned d : {2U, 3U}) {
      double prev = 1e300;
      for (long B = 1; B <= 4; ++B) {
        const SearchRecord r = search_min_measure(d, B, 1e-10, {2, 256});
        if (!r.found()) continue;
        const double m = mid(*r.best_measure);
        CHECK(m <= prev + 1e-10);
        prev = m;
      }
    }
  }

  TEST_CASE("winner is irreducible with measure above 1") {
    const SearchRecord r = search_min_measure(2, 3, 1e-10);
    REQUIRE(r.found());
    CHECK(irreducible_general(primitive_int(r.best_poly->to_rational()).primitive).verdict == Verdict::Irreducible);
    CHECK(r.best_measure->lo() > BigFloat(1L, 128));
  }
}
