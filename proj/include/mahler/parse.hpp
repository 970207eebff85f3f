#pragma once

// Polynomial text syntax.
//
//   sum of terms      "x^3/3 - x/3 + x^2 + 1", "2/3*x^3 - 1/2 x^2 - 1"
//                     term = [+|-] [c] [*] [x[^k]] [/b], c an integer or a/b
//   coefficient list  "coeffs:3,-1,3,1"  (ascending, rationals allowed)
//   named family      "@f:p" "@fstar:p" "@g:p" "@Q:p" "@lehmer"

#include <string>
#include <string_view>

#include "mahler/poly.hpp"

namespace mahler {

/// Throws ParseError (with the offending position) or DomainError for an
/// invalid family parameter.
RationalPoly parse_poly(std::string_view text);

/// Term syntax accepted by parse_poly, highest degree first, e.g.
/// "1/3*x^3 + x^2 - 1/3*x + 1".  The zero polynomial prints as "0".
std::string to_string(const RationalPoly& p);
std::string to_string(const IntPoly& p);

/// "a0,a1,...,ad".
std::string coeff_list(const RationalPoly& p);

}  // namespace mahler
