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

#include <gtest/gtest.h>

#include <set>

#include "sigmacode/curve_parse.hpp"
#include "sigmacode/error.hpp"
#include "sigmacode/rrspace.hpp"

using namespace sigmacode;

namespace {
CurveModel model(const char* text, std::uint32_t q) { return parse_curve(text, Field::of_order(q)); }
}  // namespace

TEST(RRSpace, ZeroDivisor) {
    for (const char* text : {"rational", "y2=3*(x^4+2)", "y2=x^3+x+1"}) {
        const RRBasis b = rr_basis(model(text, 5), Divisor{});
        ASSERT_EQ(b.dim(), 1u) << text;
        EXPECT_EQ(b.basis[0], function::constant(Field::one()));
    }
}

TEST(RRSpace, PolynomialsOnProjectiveLine) {
    const CurveModel m = model("rational", 5);
    const Place inf = infinite_places(m)[0];
    for (int k = 0; k <= 6; ++k) {
        const RRBasis b = rr_basis(m, Divisor::of(inf, k));
        EXPECT_EQ(b.dim(), static_cast<std::size_t>(k + 1));
        for (const FunctionElt& f : b.basis) {
            EXPECT_EQ(f.c.degree(), 0);
            EXPECT_LE(f.a.degree(), k);
        }
    }
    EXPECT_EQ(rr_basis(m, Divisor::of(inf, -1)).dim(), 0u);
}

TEST(RRSpace, DegreeTwoInfinitePlace) {
    const CurveModel m = model("y2=3*(x^4+2)", 5);
    const Place qinf = infinite_places(m)[0];
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(rr_basis(m, Divisor::of(qinf, k)).dim(), static_cast<std::size_t>(2 * k));
    const RRBasis b = rr_basis(m, Divisor::of(qinf));
    bool has_exact_pole = false;
    for (const FunctionElt& f : b.basis) {
        const auto v = valuation(m, qinf, f);
        ASSERT_TRUE(v);
        EXPECT_GE(*v, -1);
        has_exact_pole = has_exact_pole || *v == -1;
    }
    EXPECT_TRUE(has_exact_pole);
}

TEST(RRSpace, MembershipByValuation) {
    const CurveModel m = model("y2=x^3+x+1", 5);
    const auto rat = rational_places(m);
    const Divisor a = Divisor::of(rat[0], 2) + Divisor::of(rat[1]) - Divisor::of(rat[2]) + Divisor::of(places_of_degree(m, 2)[0]);
    const RRBasis b = rr_basis(m, a);
    EXPECT_EQ(b.dim(), static_cast<std::size_t>(a.degree()));  // deg A >= 2g - 1
    for (const FunctionElt& f : b.basis) {
        const Divisor pd = principal_divisor(m, f);
        EXPECT_TRUE((pd + a).is_effective());
    }
}

TEST(RRSpace, Enumeration) {
    const CurveModel m = model("rational", 5);
    const Place inf = infinite_places(m)[0];
    EXPECT_EQ(space_size(rr_basis(m, Divisor::of(inf, 0))), 5u);
    const RRBasis b = rr_basis(m, Divisor::of(inf, 2));
    EXPECT_EQ(space_size(b), 125u);
    std::set<FunctionElt> seen;
    std::uint64_t expected = 0;
    space_enumerate(b, [&](std::uint64_t idx, const FunctionElt& f) {
        EXPECT_EQ(idx, expected++);
        if (idx == 0) EXPECT_TRUE(f.is_zero());
        seen.insert(f);
    });
    EXPECT_EQ(seen.size(), 125u);
    EXPECT_EQ(space_size(rr_basis(m, Divisor::of(inf, -1))), 1u);
    EXPECT_THROW(space_size(rr_basis(m, Divisor::of(inf, 30))), Error);
}

TEST(RRSpace, ExactPoleSubsetCount) {
    const CurveModel m = model("y2=3*(x^4+2)", 5);
    const Divisor d = Divisor::of(infinite_places(m)[0]);
    for (const Place& p : rational_places(m)) {
        const Divisor g = Divisor::of(p);
        const RRBasis space = rr_basis(m, d + g);
        const auto sub = exact_pole_subset(m, d, g, space);
        EXPECT_EQ(BigInt(sub.size()), exact_pole_count(5, 1, 2, g));
        EXPECT_EQ(sub.size(), 100u);
    }
    EXPECT_EQ(exact_pole_count(5, 1, 2, Divisor{}), 25);
}

TEST(RRSpace, LocalEvaluatorAgreesWithDirectEvaluation) {
    const CurveModel m = model("y2=3*(x^4+2)", 5);
    const auto rat = rational_places(m);
    const Divisor a = Divisor::of(infinite_places(m)[0]) + Divisor::of(rat[3]);
    const RRBasis b = rr_basis(m, a);
    std::vector<Place> places = rat;
    std::vector<int> resolve(places.size(), 1);
    resolve[3] = 0;
    const LocalEvaluator ev(b, places, resolve);
    for (std::uint64_t idx = 0; idx < space_size(b); ++idx) {
        const auto lambda = space_coefficients(b, idx);
        const FunctionElt f = b.combination(lambda);
        for (std::size_t i = 0; i < places.size(); ++i) {
            if (i == 3) {
                const auto v = ev.valuation_below(lambda, i, 0);
                const auto direct = valuation(m, places[i], f);
                if (direct && *direct < 0) EXPECT_EQ(v, direct);
                else EXPECT_FALSE(v.has_value());
                continue;
            }
            EXPECT_EQ(ev.value(lambda, i), evaluate(m, f, places[i]));
        }
    }
}

TEST(RRSpace, UnsupportedInputs) {
    const CurveModel h = model("affine:y^3+y-x^4:inf=1:g=3", 9);
    EXPECT_THROW(rr_basis(h, Divisor{}), Error);
    EXPECT_THROW(exact_pole_count(5, 1, -3, Divisor{}), Error);
}
