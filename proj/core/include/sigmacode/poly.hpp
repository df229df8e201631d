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

#ifndef SIGMACODE_POLY_HPP
#define SIGMACODE_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "sigmacode/gf.hpp"

namespace sigmacode {

/// Univariate polynomial, lowest coefficient first, no trailing zeros.
struct Poly {
    std::vector<Elem> c;

    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly constant(Elem e) { return Poly({e}); }
    static Poly x() { return Poly({Field::zero(), Field::one()}); }
    static Poly monomial(Elem coeff, std::size_t degree);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const noexcept { return c.empty(); }
    Elem lead() const noexcept { return c.empty() ? Field::zero() : c.back(); }
    Elem coeff(std::size_t i) const noexcept { return i < c.size() ? c[i] : Field::zero(); }

    void trim() {
        while (!c.empty() && c.back() == Field::zero()) c.pop_back();
    }

    friend bool operator==(const Poly&, const Poly&) = default;
    friend auto operator<=>(const Poly& a, const Poly& b) {
        if (a.c.size() != b.c.size()) return a.c.size() <=> b.c.size();
        for (std::size_t i = a.c.size(); i-- > 0;)
            if (a.c[i] != b.c[i]) return a.c[i] <=> b.c[i];
        return std::strong_ordering::equal;
    }
};

namespace poly {

Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly neg(const Field& f, const Poly& a);
Poly scale(const Field& f, const Poly& a, Elem s);
Poly mul(const Field& f, const Poly& a, const Poly& b);
Poly pow(const Field& f, const Poly& a, unsigned e);

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
Poly rem(const Field& f, const Poly& a, const Poly& b);
/// Exact quotient; throws Internal if b does not divide a.
Poly exact_div(const Field& f, const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& f, const Poly& a, const Poly& b);
Poly monic(const Field& f, const Poly& a);
Poly deriv(const Field& f, const Poly& a);

Elem eval(const Field& f, const Poly& a, Elem x);

/// Coefficientwise image under a field embedding.
Poly lift(const Embedding& e, const Poly& a);

/// Monic irreducible polynomials of degree d <= 3, in increasing coefficient-index order.
std::vector<Poly> monic_irreducibles(const Field& f, unsigned d);

/// Multiplicity of the monic irreducible p in a (a nonzero).
unsigned multiplicity(const Field& f, const Poly& a, const Poly& p);

std::string to_string(const Field& f, const Poly& a, char var = 'x');

}  // namespace poly
}  // namespace sigmacode

#endif
