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

#ifndef SIGMACODE_FUNCTION_HPP
#define SIGMACODE_FUNCTION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sigmacode/poly.hpp"

namespace sigmacode {

class CurveModel;

/// Rational function (a + b*y) / c.
///
/// Canonical form: gcd(a, b, c) = 1 and c monic; zero is a = b = 0, c = 1.
/// Two canonical functions are equal iff their triples are equal.
struct FunctionElt {
    Poly a;
    Poly b;
    Poly c = Poly::constant(Field::one());

    bool is_zero() const noexcept { return a.is_zero() && b.is_zero(); }

    friend bool operator==(const FunctionElt&, const FunctionElt&) = default;
    friend auto operator<=>(const FunctionElt&, const FunctionElt&) = default;
};

/// Flat identity key of a canonical function, suitable for hashing.
struct FunctionKey {
    std::vector<std::uint32_t> words;

    friend bool operator==(const FunctionKey&, const FunctionKey&) = default;
};

struct FunctionKeyHash {
    std::size_t operator()(const FunctionKey& k) const noexcept;
};

namespace function {

FunctionElt canonicalize(const Field& f, FunctionElt e);

FunctionElt constant(Elem e);
FunctionElt from_poly(const Field& f, const Poly& a);
/// y itself; only meaningful on hyperelliptic models.
FunctionElt y();

FunctionElt add(const CurveModel& m, const FunctionElt& u, const FunctionElt& v);
FunctionElt sub(const CurveModel& m, const FunctionElt& u, const FunctionElt& v);
FunctionElt neg(const CurveModel& m, const FunctionElt& u);
FunctionElt mul(const CurveModel& m, const FunctionElt& u, const FunctionElt& v);
/// Throws DivisionByZero for the zero function.
FunctionElt inv(const CurveModel& m, const FunctionElt& u);
FunctionElt div(const CurveModel& m, const FunctionElt& u, const FunctionElt& v);

/// Key of an already canonical function.
FunctionKey key(const FunctionElt& u);

std::string to_string(const Field& f, const FunctionElt& u);

}  // namespace function
}  // namespace sigmacode

#endif
