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

#ifndef SIGMACODE_ZETA_HPP
#define SIGMACODE_ZETA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sigmacode/bigint.hpp"

namespace sigmacode {

/// L(t) = a_0 + a_1 t + ... + a_{2g} t^{2g}.
struct LPolynomial {
    std::uint64_t q = 0;
    unsigned g = 0;
    std::vector<BigInt> coeffs;
};

/// Counts A_0..A_imax of effective divisors by degree.
struct ZetaTable {
    std::uint64_t q = 0;
    unsigned g = 0;
    std::vector<BigInt> counts;
};

namespace zeta {

inline constexpr unsigned kMaxDegree = 64;

LPolynomial rational(std::uint64_t q);
/// [1, N - q - 1, q]; throws HasseWeilViolation when |N - q - 1| > 2 sqrt(q).
LPolynomial elliptic(std::uint64_t q, std::uint64_t n);
/// (1 + sqrt(q) t)^{2g}; throws NotASquare.
LPolynomial maximal(std::uint64_t q, unsigned g);
/// Full coefficient vector of odd length with a_0 = 1; throws FunctionalEquation
/// when a_{2g-j} != q^{g-j} a_j.
LPolynomial custom(std::uint64_t q, std::vector<BigInt> coeffs);

ZetaTable effective_counts(const LPolynomial& l, unsigned imax);

/// Number of rational places over F_{q^r} implied by L.
BigInt rational_points(const LPolynomial& l, unsigned r);

/// {"q":..,"g":..,"coeffs":[..],"counts":[..]} with integers as decimal strings.
std::string to_json(const LPolynomial& l, const ZetaTable& t);
/// Reads the object written by to_json; counts are recomputed.
LPolynomial lpoly_from_json(const std::string& text);

}  // namespace zeta
}  // namespace sigmacode

#endif
