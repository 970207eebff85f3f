#pragma once

// Search for the irreducible integer-valued polynomial of degree d with the
// smallest Mahler measure > 1 inside a box of binomial coordinates.
//
// Box: c_d in [1, B], c_k in [-B, B] for k < d, so B (2B+1)^d candidates
// (global negation leaves M unchanged and is removed by c_d >= 1).
// B = 0 gives the empty box.
// Order: lexicographic with c_0 most significant.
// x -> -x also preserves M and irreducibility; a candidate is skipped when
// the sign-normalized coordinates of P(-x) lie in the box and come earlier.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mahler/bigfloat.hpp"
#include "mahler/poly.hpp"

namespace mahler {

class CandidateBox {
 public:
  CandidateBox(unsigned degree, long bound);

  unsigned degree() const noexcept { return d_; }
  long bound() const noexcept { return b_; }
  std::uint64_t size() const noexcept { return size_; }

  BinomialPoly at(std::uint64_t index) const;
  std::optional<std::uint64_t> index_of(const BinomialPoly& p) const;

 private:
  unsigned d_;
  long b_;
  std::uint64_t size_;
};

/// Every candidate of the box in enumeration order.
std::vector<BinomialPoly> enumerate_candidates(unsigned degree, long bound);

/// Sign-normalized binomial coordinates of P(-x).
BinomialPoly mirror(const BinomialPoly& p);

inline constexpr std::string_view kSymmetryConvention =
    "c_d >= 1 (global sign); x -> -x representative with lexicographically smaller (c_0, ..., c_d)";

struct SearchRecord {
  unsigned degree = 0;
  long box_bound = 0;
  std::optional<BinomialPoly> best_poly;
  std::optional<Interval> best_measure;
  std::uint64_t best_index = 0;
  std::uint64_t candidates_scanned = 0;  // whole box
  std::uint64_t symmetry_skipped = 0;
  std::uint64_t reducible_count = 0;
  std::uint64_t irreducible_count = 0;
  std::uint64_t inconclusive_count = 0;
  std::uint64_t measure_one_count = 0;   // certified M = 1
  std::uint64_t ambiguous_count = 0;     // M = 1 could not be decided
  std::uint64_t below_one_count = 0;   // irreducible with M < 1 - tol; must stay 0
  double wall_seconds = 0;

  bool found() const { return best_poly.has_value(); }
};

struct SearchOptions {
  unsigned threads = 1;
  std::uint64_t chunk_size = 512;
};

SearchRecord search_min_measure(unsigned degree, long bound, double tol, SearchOptions opts = {});

}  // namespace mahler
