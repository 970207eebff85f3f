#pragma once

// Irreducibility certificates over Q.
//
// ljunggren_verify searches all integer k with k * reciprocal(k) equal to
// f*_p * reciprocal(f*_p).  If f*_p = g h were a nontrivial factorization,
// k = g * reciprocal(h) would be such a solution other than +-f*_p and
// +-reciprocal(f*_p), provided f*_p and its reciprocal share no zero.
//
// irreducible_general handles arbitrary primitive integer polynomials:
// rational roots, a distinct-degree sieve modulo small primes, then
// Kronecker-style bounded factor exhaustion for small degree.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mahler/poly.hpp"

namespace mahler {

enum class Verdict { Irreducible, Reducible, Inconclusive };
enum class CertMethod { LjunggrenSearch, ModPDegreeSieve, BoundedFactorExhaustion, RationalRoot, ExplicitFactor };

std::string_view verdict_name(Verdict v);
std::string_view method_name(CertMethod m);
CertMethod method_from_name(std::string_view name);

/// Factor degrees of P modulo one prime, as (degree, count) pairs.
struct SievePattern {
  std::uint64_t prime = 0;
  std::vector<std::pair<unsigned, unsigned>> factor_degrees;
};

/// One assignment (b_i, b_{p-i}) made at depth i of the search.
struct PairAssignment {
  std::size_t i = 0;
  long b_i = 0;
  long b_p_minus_i = 0;
};

/// A top-level branch (choice of b_1, b_{p-1}) and the chain of assignments
/// below it that were forced (exactly one feasible child).
struct BranchTrace {
  PairAssignment first;
  std::vector<PairAssignment> forced;
  std::size_t dead_end_depth = 0;  // depth with no feasible child, 0 if none
  std::uint64_t nodes = 0;
  std::size_t solutions = 0;
};

struct LjunggrenTrace {
  long p = 0;
  bool pruning = true;
  std::uint64_t nodes_visited = 0;
  std::vector<std::vector<long>> solutions;  // b_0..b_p
  std::vector<BranchTrace> branches;
  bool only_trivial = false;
  bool no_common_zero = false;
  std::vector<std::string> symmetry_notes;
};

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  CertMethod method = CertMethod::ExplicitFactor;
  std::optional<IntPoly> factor;  // Reducible: divides P with cofactor of positive degree
  std::optional<LjunggrenTrace> ljunggren;
  std::vector<SievePattern> sieve;
  std::vector<unsigned> possible_factor_degrees;  // after the sieve, within 1..deg-1
  std::uint64_t combinations_tried = 0;
  std::string note;
};

/// resultant(f*_p, reciprocal(f*_p)) != 0.
bool common_zero_check(long p);

/// f*_p * reciprocal(f*_p).
IntPoly product_poly(long p);

struct LjunggrenOptions {
  bool pruning = true;
};

/// Requires p prime, p = 3 mod 4.
Certificate ljunggren_verify(long p, LjunggrenOptions opts = {});

struct GeneralOptions {
  unsigned sieve_primes = 5;
  std::uint64_t sieve_prime_limit = 2000;
  std::size_t exhaustion_degree_cap = 8;
  std::uint64_t combination_budget = 2'000'000;
  bool use_sieve = true;
};

/// Requires P primitive of degree >= 1.
Certificate irreducible_general(const IntPoly& p, GeneralOptions opts = {});

}  // namespace mahler
