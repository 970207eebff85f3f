#pragma once

// Dense polynomials over GF(q) for small primes q, enough for
// distinct-degree factorization.

#include <cstdint>
#include <utility>
#include <vector>

#include "mahler/poly.hpp"

namespace mahler::modp {

/// Ascending coefficients in [0, q), no trailing zeros.  Empty means zero.
using PolyMod = std::vector<std::uint64_t>;

PolyMod reduce(const IntPoly& p, std::uint64_t q);

std::uint64_t inverse(std::uint64_t a, std::uint64_t q);

PolyMod sub(const PolyMod& a, const PolyMod& b, std::uint64_t q);
PolyMod mul(const PolyMod& a, const PolyMod& b, std::uint64_t q);
PolyMod rem(const PolyMod& a, const PolyMod& b, std::uint64_t q);
PolyMod quo(const PolyMod& a, const PolyMod& b, std::uint64_t q);
PolyMod derivative(const PolyMod& a, std::uint64_t q);
PolyMod make_monic(const PolyMod& a, std::uint64_t q);
/// Monic gcd.
PolyMod gcd(PolyMod a, PolyMod b, std::uint64_t q);
PolyMod powmod(const PolyMod& base, std::uint64_t e, const PolyMod& m, std::uint64_t q);

bool is_squarefree(const PolyMod& a, std::uint64_t q);

/// Distinct-degree factorization of a squarefree polynomial of positive
/// degree: (k, n) means n irreducible factors of degree k.
std::vector<std::pair<unsigned, unsigned>> distinct_degree_factorization(const PolyMod& a, std::uint64_t q);

bool is_prime(std::uint64_t n);

}  // namespace mahler::modp
