#include <random>

#include "doctest.h"
#include "mahler/families.hpp"
#include "mahler/irreducibility.hpp"
#include "mahler/modular.hpp"
#include "mahler/parse.hpp"
#include "test_support.hpp"

using namespace mahler;

namespace {

IntPoly Z(const char* s) { return primitive_int(parse_poly(s)).primitive; }

IntPoly fstar(long p) { return primitive_int(make_family(Family::fstar, p)).primitive; }

bool divides(const IntPoly& f, const IntPoly& p) {
  auto q = exact_quotient(p, f);
  return q && q->degree() >= Degree(1) && f.degree() >= Degree(1);
}

// Distinct roots in GF(q) by exhaustive evaluation.
unsigned count_roots_mod(const IntPoly& p, std::uint64_t q) {
  unsigned n = 0;
  for (std::uint64_t a = 0; a < q; ++a) {
    mpz_class v = p(mpz_class(static_cast<unsigned long>(a)));
    if (mpz_divisible_ui_p(v.get_mpz_t(), q)) ++n;
  }
  return n;
}

// x^d + 2 * (random) with constant term 2 mod 4: irreducible by Eisenstein at 2.
IntPoly eisenstein(std::mt19937_64& rng, std::size_t d) {
  std::vector<mpz_class> c(d + 1);
  for (std::size_t k = 1; k < d; ++k) c[k] = 2 * (static_cast<long>(rng() % 7) - 3);
  c[0] = 2 * (2 * (static_cast<long>(rng() % 5) - 2) + 1);
  c[d] = 1;
  return IntPoly(std::move(c));
}

}  // namespace

TEST_SUITE("modular arithmetic") {
  TEST_CASE("distinct-degree factorization counts linear factors") {
    std::mt19937_64 rng(3);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
      IntPoly p = mahler::testing::random_int_poly(rng, 2 + rng() % 8, 9);
      for (std::uint64_t q : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        auto red = modp::reduce(p, q);
        if (red.size() != p.size() || !modp::is_squarefree(red, q)) continue;
        auto ddf = modp::distinct_degree_factorization(red, q);
        unsigned linear = 0, total = 0;
        for (auto [k, n] : ddf) {
          if (k == 1) linear = n;
          total += k * n;
        }
        CHECK(total == p.degree().value());
        CHECK(linear == count_roots_mod(p, q));
        ++checked;
      }
    }
    CHECK(checked > 300);
  }

  TEST_CASE("known factorizations") {
    // x^4 + 1 splits into quadratics mod 3
    auto ddf = modp::distinct_degree_factorization(modp::reduce(Z("x^4+1"), 3), 3);
    REQUIRE(ddf.size() == 1);
    CHECK(ddf[0] == std::pair<unsigned, unsigned>{2, 2});
    // x^2 + 1 is irreducible mod 3
    ddf = modp::distinct_degree_factorization(modp::reduce(Z("x^2+1"), 3), 3);
    CHECK(ddf == std::vector<std::pair<unsigned, unsigned>>{{2, 1}});
    CHECK_FALSE(modp::is_squarefree(modp::reduce(Z("x^2+2x+1"), 5), 5));
  }

  TEST_CASE("inverse") {
    for (std::uint64_t a = 1; a < 97; ++a) CHECK(a * modp::inverse(a, 97) % 97 == 1);
  }
}

TEST_SUITE("product_poly and common zeros") {
  TEST_CASE("p = 3 with colliding exponents") {
    CHECK(product_poly(3) == IntPoly({3, 8, -3, 20, -3, 8, 3}));
  }

  TEST_CASE("displayed expansion for p > 3") {
    for (long p : {5L, 7L, 11L, 13L, 19L}) {
      const auto up = static_cast<std::size_t>(p);
      std::vector<mpz_class> c(2 * up + 1);
      c[2 * up] = p;
      c[2 * up - 1] = -1;
      c[(3 * up + 1) / 2] = p * p;
      c[up + 1] = -p;
      c[up] = 2 * (p * p + 1);
      c[up - 1] = -p;
      c[(up - 1) / 2] = p * p;
      c[1] = -1;
      c[0] = p;
      CHECK(product_poly(p) == IntPoly(c));
    }
    CHECK(product_poly(7).coeff(7) == 100);
  }

  TEST_CASE("product is self-reciprocal") {
    for (long p = 3; p < 40; p += 2) CHECK(reciprocal(product_poly(p)) == product_poly(p));
  }

  TEST_CASE("common_zero_check") {
    CHECK(common_zero_check(3));
    CHECK(common_zero_check(11));
    CHECK_FALSE(common_zero_check(13));
    for (long p = 3; p < 60; p += 2)
      if (is_prime(p)) CHECK(common_zero_check(p) == (p % 4 == 3));
  }
}

TEST_SUITE("ljunggren_verify") {
  TEST_CASE("irreducible for p = 3 mod 4") {
    for (long p : {3L, 7L, 11L, 19L, 23L, 31L}) {
      CAPTURE(p);
      Certificate c = ljunggren_verify(p);
      CHECK(c.verdict == Verdict::Irreducible);
      CHECK(c.method == CertMethod::LjunggrenSearch);
      REQUIRE(c.ljunggren);
      CHECK(c.ljunggren->only_trivial);
      CHECK(c.ljunggren->no_common_zero);
      REQUIRE(c.ljunggren->solutions.size() == 1);
      const auto& s = c.ljunggren->solutions.front();
      IntPoly f = fstar(p);
      for (std::size_t k = 0; k < s.size(); ++k) CHECK(f.coeff(k) == s[k]);
    }
  }

  TEST_CASE("p = 19 branch b_{p-1} = -1 forces alternating signs") {
    Certificate c = ljunggren_verify(19);
    const auto& t = *c.ljunggren;
    const BranchTrace* branch = nullptr;
    for (const auto& b : t.branches)
      if (b.first.b_p_minus_i == -1) branch = &b;
    REQUIRE(branch != nullptr);
    CHECK(branch->first.b_i == 18);
    CHECK(branch->solutions == 0);
    CHECK(branch->dead_end_depth > 0);
    REQUIRE(branch->forced.size() >= 6);
    for (const auto& a : branch->forced) {
      const long j = static_cast<long>(a.i);
      CHECK(a.b_p_minus_i == (j % 2 == 0 ? 1 : -1));
      if (j >= 3) CHECK(a.b_i == 0);
    }
    // the other top-level branch is the one containing f*_19
    bool has_other = false;
    for (const auto& b : t.branches)
      if (b.first.b_p_minus_i == 0 && b.first.b_i == -1) has_other = b.solutions == 1;
    CHECK(has_other);
  }

  TEST_CASE("pruning does not change the solution set") {
    for (long p : {3L, 7L}) {
      auto pruned = ljunggren_verify(p, {true});
      auto full = ljunggren_verify(p, {false});
      CHECK(pruned.ljunggren->solutions == full.ljunggren->solutions);
      CHECK(full.verdict == Verdict::Irreducible);
      CHECK(full.ljunggren->nodes_visited >= pruned.ljunggren->nodes_visited);
    }
  }

  TEST_CASE("precondition") {
    CHECK_THROWS_AS(ljunggren_verify(5), DomainError);
    CHECK_THROWS_AS(ljunggren_verify(15), DomainError);
    CHECK_THROWS_AS(ljunggren_verify(1), DomainError);
  }
}

TEST_SUITE("irreducible_general") {
  TEST_CASE("small examples") {
    CHECK(irreducible_general(Z("x^2-2")).verdict == Verdict::Irreducible);
    Certificate c = irreducible_general(Z("x^2-1"));
    CHECK(c.verdict == Verdict::Reducible);
    REQUIRE(c.factor);
    CHECK(*c.factor == Z("x-1"));
    CHECK(irreducible_general(Z("x^5-x+5")).verdict == Verdict::Irreducible);
    CHECK(irreducible_general(Z("x^4+1")).verdict == Verdict::Irreducible);
    CHECK(irreducible_general(Z("3x-2")).verdict == Verdict::Irreducible);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(irreducible_general(IntPoly({2, 4})), DomainError);
    CHECK_THROWS_AS(irreducible_general(IntPoly({5})), DomainError);
  }

  TEST_CASE("x^4 + 1 needs more than the sieve") {
    // reducible modulo every prime, so only exhaustion can certify it
    Certificate c = irreducible_general(Z("x^4+1"));
    CHECK(c.method == CertMethod::BoundedFactorExhaustion);
  }

  TEST_CASE("quartic product of quadratics is found by exhaustion") {
    IntPoly p = Z("x^2+x+3") * Z("x^2-2x+5");
    Certificate c = irreducible_general(p);
    CHECK(c.verdict == Verdict::Reducible);
    REQUIRE(c.factor);
    CHECK(divides(*c.factor, p));
    CHECK(c.method == CertMethod::BoundedFactorExhaustion);
  }

  TEST_CASE("f*_p agrees with ljunggren_verify for p = 3 mod 4") {
    for (long p : {3L, 7L, 11L, 19L}) {
      Certificate c = irreducible_general(fstar(p));
      CHECK(c.verdict == Verdict::Irreducible);
      CHECK(ljunggren_verify(p).verdict == c.verdict);
    }
  }

  TEST_CASE("f*_p is divisible by x + 1 for p = 1 mod 4") {
    for (long p : {5L, 13L, 17L, 29L}) {
      Certificate c = irreducible_general(fstar(p));
      CHECK(c.verdict == Verdict::Reducible);
      REQUIRE(c.factor);
      CHECK(divides(*c.factor, fstar(p)));
      CHECK(exact_quotient(*c.factor, Z("x+1")).has_value());
    }
  }

  TEST_CASE("p g_p is irreducible for primes up to 13") {
    for (long p : {3L, 5L, 7L, 11L, 13L})
      CHECK(irreducible_general(primitive_int(make_family(Family::g, p)).primitive).verdict == Verdict::Irreducible);
  }

  TEST_CASE("products of random factors are reducible") {
    std::mt19937_64 rng(55);
    for (int i = 0; i < 80; ++i) {
      IntPoly a = primitive_part(mahler::testing::random_int_poly(rng, 1 + rng() % 4, 4));
      IntPoly b = primitive_part(mahler::testing::random_int_poly(rng, 1 + rng() % 4, 4));
      IntPoly p = primitive_part(a * b);
      Certificate c = irreducible_general(p);
      CHECK(c.verdict == Verdict::Reducible);
      if (c.factor) CHECK(divides(*c.factor, p));
    }
  }

  TEST_CASE("Eisenstein polynomials are irreducible") {
    std::mt19937_64 rng(66);
    for (int i = 0; i < 60; ++i) {
      IntPoly p = eisenstein(rng, 2 + rng() % 7);
      CHECK(irreducible_general(p).verdict == Verdict::Irreducible);
    }
  }

  TEST_CASE("sieve verdicts are never contradicted by exhaustion") {
    std::mt19937_64 rng(77);
    GeneralOptions no_sieve;
    no_sieve.use_sieve = false;
    int sieved = 0;
    for (int i = 0; i < 150; ++i) {
      IntPoly p = primitive_part(mahler::testing::random_int_poly(rng, 2 + rng() % 5, 6));
      Certificate c = irreducible_general(p);
      if (c.method != CertMethod::ModPDegreeSieve || c.verdict != Verdict::Irreducible) continue;
      ++sieved;
      Certificate e = irreducible_general(p, no_sieve);
      CHECK(e.verdict != Verdict::Reducible);
    }
    CHECK(sieved > 20);
  }
}
