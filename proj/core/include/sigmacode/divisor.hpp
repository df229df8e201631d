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

#ifndef SIGMACODE_DIVISOR_HPP
#define SIGMACODE_DIVISOR_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "sigmacode/gf.hpp"

namespace sigmacode {

enum class PlaceKind : std::uint8_t { Infinite = 0, Finite = 1 };

/// Closed point of a curve model.
///
/// x and y live in F_{q^degree} and name the orbit representative with the
/// smallest (x, y) index pair. Infinite places store the branch value in y
/// (quartic models) or a declared index in x (plane models).
struct Place {
    unsigned degree = 1;
    PlaceKind kind = PlaceKind::Finite;
    Elem x{};
    Elem y{};

    friend bool operator==(const Place&, const Place&) = default;
    friend auto operator<=>(const Place&, const Place&) = default;
};

/// Finite formal sum of places with nonzero integer coefficients.
class Divisor {
   public:
    Divisor() = default;
    static Divisor of(const Place& p, int coeff = 1);

    int coefficient(const Place& p) const noexcept;
    void set(const Place& p, int coeff);
    void add(const Place& p, int coeff);

    long long degree() const noexcept;
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_effective() const noexcept;
    std::vector<Place> support() const;
    const std::map<Place, int>& terms() const noexcept { return terms_; }

    /// Pointwise max (union) and min (intersection).
    Divisor join(const Divisor& other) const;
    Divisor meet(const Divisor& other) const;

    Divisor operator+(const Divisor& other) const;
    Divisor operator-(const Divisor& other) const;
    Divisor operator-() const;
    Divisor scaled(int k) const;

    /// Positive and negative parts.
    Divisor positive_part() const;
    Divisor negative_part() const;

    friend bool operator==(const Divisor&, const Divisor&) = default;
    friend bool operator<(const Divisor& a, const Divisor& b) { return a.terms_ < b.terms_; }

   private:
    std::map<Place, int> terms_;
};

}  // namespace sigmacode

#endif
