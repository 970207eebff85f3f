#pragma once

// Shared generators and independent oracles for the test suites.

#include <random>
#include <vector>

#include "mahler/poly.hpp"

namespace mahler::testing {

inline RationalPoly random_rational_poly(std::mt19937_64& rng, std::size_t degree, long num_bound = 20,
                                         long den_bound = 9) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  std::vector<mpq_class> c(degree + 1);
  for (auto& x : c) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  while (c.back() == 0) c.back() = mpq_class(num(rng), den(rng));
  c.back().canonicalize();
  return RationalPoly(std::move(c));
}

inline IntPoly random_int_poly(std::mt19937_64& rng, std::size_t degree, long bound = 5) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<mpz_class> c(degree + 1);
  for (auto& x : c) x = d(rng);
  while (c.back() == 0) c.back() = d(rng);
  while (c.front() == 0) c.front() = d(rng);
  return IntPoly(std::move(c));
}

/// Determinant of the Sylvester matrix by exact Gaussian elimination.
inline mpq_class sylvester_resultant(const RationalPoly& a, const RationalPoly& b) {
  const std::size_t m = a.degree().value(), n = b.degree().value();
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<mpq_class>> s(size, std::vector<mpq_class>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a.coeffs()[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b.coeffs()[n - k];
  mpq_class det = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t piv = col;
    while (piv < size && s[piv][col] == 0) ++piv;
    if (piv == size) return 0;
    if (piv != col) {
      std::swap(s[piv], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (std::size_t r = col + 1; r < size; ++r) {
      if (s[r][col] == 0) continue;
      mpq_class f = s[r][col] / s[col][col];
      for (std::size_t c = col; c < size; ++c) s[r][c] -= f * s[col][c];
    }
  }
  return det;
}

}  // namespace mahler::testing
