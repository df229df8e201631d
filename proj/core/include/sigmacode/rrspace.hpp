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

#ifndef SIGMACODE_RRSPACE_HPP
#define SIGMACODE_RRSPACE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "sigmacode/bigint.hpp"
#include "sigmacode/curve.hpp"

namespace sigmacode {

/// Basis of L(A) = {f : (f) + A >= 0} ∪ {0}.
///
/// All basis functions share the denominator c(x); numerators[i] = (a_i, b_i)
/// gives basis[i] = (a_i + b_i y) / c before canonicalization.
struct RRBasis {
    CurveModel model;
    Divisor divisor;
    Poly denominator;
    std::vector<std::pair<Poly, Poly>> numerators;
    std::vector<FunctionElt> basis;

    std::size_t dim() const noexcept { return basis.size(); }
    /// sum lambda_i basis_i, canonical.
    FunctionElt combination(std::span<const Elem> lambda) const;
};

inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 26;

/// Requires supp(A) on places of degree <= 3. Throws UnsupportedSupport,
/// DimensionMismatch.
RRBasis rr_basis(const CurveModel& m, const Divisor& a);

/// q^dim; throws TooLarge above kEnumerationLimit.
std::uint64_t space_size(const RRBasis& b);
/// Coefficient vector of index idx: base-q digits, lowest first.
std::vector<Elem> space_coefficients(const RRBasis& b, std::uint64_t idx);
/// Visits every element, zero first, in coefficient-index order.
void space_enumerate(const RRBasis& b, const std::function<void(std::uint64_t, const FunctionElt&)>& visit);

/// L_D(G): members of L(D + G) with nu_Q(f) = -G_Q - D_Q at every Q in supp(G).
std::vector<FunctionElt> exact_pole_subset(const CurveModel& m, const Divisor& d, const Divisor& g,
                                           const RRBasis& space);

/// q^{m + deg G - g + 1} prod_{Q in supp G} (1 - q^{-deg Q}), exact.
BigInt exact_pole_count(std::uint64_t q, unsigned genus, long long m, const Divisor& g);

/// Expansions of a basis at fixed places, so that values and pole orders of
/// any combination come from linear combinations of stored coefficients.
class LocalEvaluator {
   public:
    /// resolve[i]: valuations below resolve[i] are exact at places[i].
    LocalEvaluator(const RRBasis& basis, std::vector<Place> places, std::vector<int> resolve);

    const std::vector<Place>& places() const noexcept { return places_; }

    /// Value at a rational place (index into places()); needs resolve >= 1.
    Symbol value(std::span<const Elem> lambda, std::size_t place) const;
    /// nu_P(f) if it is below bound (bound <= resolve), else nullopt.
    std::optional<int> valuation_below(std::span<const Elem> lambda, std::size_t place, int bound) const;

   private:
    struct Site {
        const Extension* ext = nullptr;
        int den_order = 0;
        Elem den_lead{};
        int emin = 0;
        int emax = 0;             // exclusive
        std::vector<Elem> coeff;  // (emax - emin) rows of dim entries
    };

    Elem combined(const Site& s, std::span<const Elem> lambda, int e) const;

    CurveModel model_;
    std::vector<Place> places_;
    std::vector<Site> sites_;
    std::size_t dim_ = 0;
};

}  // namespace sigmacode

#endif
