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

#ifndef SIGMACODE_SERIES_HPP
#define SIGMACODE_SERIES_HPP

#include <optional>
#include <vector>

#include "sigmacode/gf.hpp"
#include "sigmacode/poly.hpp"

namespace sigmacode {

/// Truncated Laurent series sum_{i} c[i] t^{val+i} + O(t^{cutoff()}).
///
/// Leading entries of c may be zero; an empty c means the series is only
/// known to vanish below t^{val}.
struct Laurent {
    int val = 0;
    std::vector<Elem> c;

    int cutoff() const noexcept { return val + static_cast<int>(c.size()); }
};

namespace series {

/// Exact constant e, carried with relative precision prec.
Laurent constant(Elem e, int prec);
/// e * t^exp + O(t^{exp + prec}).
Laurent monomial(Elem e, int exp, int prec);

/// Strips leading zero coefficients.
Laurent normalize(Laurent a);
/// Order of the first known nonzero coefficient; nullopt if none is known.
std::optional<int> order(const Laurent& a);
/// Coefficient of t^e; e must be below the cutoff.
Elem coeff(const Laurent& a, int e);

Laurent add(const Field& k, const Laurent& a, const Laurent& b);
Laurent sub(const Field& k, const Laurent& a, const Laurent& b);
Laurent neg(const Field& k, const Laurent& a);
Laurent scale(const Field& k, const Laurent& a, Elem s);
/// a + e, with e exact.
Laurent add_constant(const Field& k, const Laurent& a, Elem e);
Laurent mul(const Field& k, const Laurent& a, const Laurent& b);
/// Throws PrecisionExceeded when no nonzero coefficient is known.
Laurent inv(const Field& k, const Laurent& a);
/// Drops everything at or above t^{cut}.
Laurent truncate(Laurent a, int cut);

/// p(x) for a polynomial p over k, by Horner's rule.
Laurent eval_poly(const Field& k, const Poly& p, const Laurent& x);

}  // namespace series
}  // namespace sigmacode

#endif
