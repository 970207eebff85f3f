#pragma once

// The polynomial families studied here:
//   f_p(x)  = (x^p - x)/p + x^((p+1)/2) + 1
//   f*_p(x) = p f_p(x) = x^p + p x^((p+1)/2) - x + p
//   g_p(x)  = (x^p - x)/p + 1
//   Q_p(x)  = (x^2 - 1)/p + x
// together with closed forms tied to them.

#include <gmpxx.h>

#include <string_view>

#include "mahler/bigfloat.hpp"
#include "mahler/poly.hpp"

namespace mahler {

enum class Family { f, fstar, g, Q };

std::string_view family_name(Family f);
/// Accepts "f", "fstar", "g", "Q".
Family family_from_name(std::string_view name);

struct FamilyParams {
  long p = 3;
  long N = 1;  // (p - 1) / 2
  bool is_prime = true;

  /// Throws DomainError unless p is odd and >= 3.
  static FamilyParams make(long p);
};

bool is_prime(long n);

RationalPoly make_family(Family family, long p);

/// x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1.
RationalPoly lehmer_polynomial();

/// Enclosures of the zeros of Q_p, i.e. of x^2 + p x - 1:
/// alpha1 = (-p + sqrt(p^2+4))/2 inside the unit disk, alpha2 = (-p - sqrt(p^2+4))/2 outside.
struct QuadraticRoots {
  Interval alpha1;
  Interval alpha2;
  bool exact_form = true;  // both come from the quadratic formula, no iteration
};

QuadraticRoots qp_roots(long p, Precision prec);

/// log((1 + sqrt(1 + 4/p^2)) / 2) = m(Q_p).
Interval m_qp_closed(long p, Precision prec);

/// binom(p-1, N) / p^(N+1).
mpq_class epsilon_p(long p);

mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace mahler
