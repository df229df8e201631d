/*
   Copyright 2026 The sigmacode Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SIGMACODE_CURVE_PARSE_HPP
#define SIGMACODE_CURVE_PARSE_HPP

#include <string_view>
#include <vector>

#include "sigmacode/curve.hpp"

namespace sigmacode {

/// Polynomial in x and y with integer coefficients reduced mod p.
///
/// Accepts + - * ^, parentheses, implicit products such as 3x, and at most
/// one '=' (read as lhs - rhs). Terms are sorted by (j, i).
std::vector<BiTerm> parse_bivariate(std::string_view text, std::uint32_t p);

/// Curve description:
///   "rational"
///   "y2=POLY(x)" or "y^2=POLY(x)"
///   "affine:POLY(x,y):inf=K[:g=G]"
/// Throws ParseError on malformed text, UnsupportedModel on invalid models.
CurveModel parse_curve(std::string_view text, const Field& base);

}  // namespace sigmacode

#endif
