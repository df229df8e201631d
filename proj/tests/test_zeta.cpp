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

#include "sigmacode/error.hpp"
#include "sigmacode/zeta.hpp"
#include "support/oracle.hpp"

using namespace sigmacode;

namespace {
std::vector<BigInt> big(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST(Zeta, Families) {
    EXPECT_EQ(zeta::rational(5).coeffs, big({1}));
    EXPECT_EQ(zeta::elliptic(5, 10).coeffs, big({1, 4, 5}));
    EXPECT_EQ(zeta::elliptic(9, 16).coeffs, big({1, 6, 9}));
    EXPECT_EQ(zeta::elliptic(5, 6).coeffs, big({1, 0, 5}));
    const LPolynomial h = zeta::maximal(9, 3);
    EXPECT_EQ(h.coeffs, big({1, 18, 135, 540, 1215, 1458, 729}));
    EXPECT_EQ(zeta::maximal(9, 1).coeffs, zeta::elliptic(9, 16).coeffs);
    EXPECT_EQ(zeta::maximal(4, 0).coeffs, big({1}));
}

TEST(Zeta, Errors) {
    EXPECT_THROW(zeta::elliptic(5, 11), Error);  // |11 - 6| > 2 sqrt 5
    EXPECT_THROW(zeta::maximal(5, 1), Error);
    EXPECT_THROW(zeta::custom(5, big({1, 4, 6})), Error);
    EXPECT_NO_THROW(zeta::custom(5, big({1, 4, 5})));
}

TEST(Zeta, EffectiveCounts) {
    EXPECT_EQ(zeta::effective_counts(zeta::elliptic(5, 10), 3).counts, big({1, 10, 60, 310}));
    const auto r = zeta::effective_counts(zeta::rational(5), 6).counts;
    for (unsigned i = 0; i < r.size(); ++i) EXPECT_EQ(r[i], (ipow(BigInt(5), i + 1) - 1) / 4);
    const auto h = zeta::effective_counts(zeta::maximal(9, 3), 3).counts;
    EXPECT_EQ(h, big({1, 28, 406, 4348}));
}

TEST(Zeta, CountsMatchSeriesOracle) {
    for (const LPolynomial& l : {zeta::elliptic(5, 10), zeta::elliptic(7, 12), zeta::maximal(9, 3), zeta::rational(4),
                                 zeta::maximal(25, 2)}) {
        const auto z = zeta::effective_counts(l, 20).counts;
        EXPECT_EQ(z, oracle::series_counts(l.coeffs, l.q, 20)) << l.q << " g=" << l.g;
    }
}

TEST(Zeta, CountsMatchPlaceOracle) {
    const std::vector<std::uint64_t> n{oracle::hyperelliptic_points(5, 1, {6, 0, 0, 0, 3}),
                                       oracle::hyperelliptic_points(5, 2, {6, 0, 0, 0, 3}),
                                       oracle::hyperelliptic_points(5, 3, {6, 0, 0, 0, 3})};
    const auto a = oracle::effective_from_places(oracle::places_from_points(n));
    EXPECT_EQ(a, big({1, 10, 60, 310}));
}

TEST(Zeta, RationalPoints) {
    const LPolynomial l = zeta::elliptic(5, 10);
    EXPECT_EQ(zeta::rational_points(l, 1), 10);
    EXPECT_EQ(zeta::rational_points(l, 2), 20);
    EXPECT_EQ(zeta::rational_points(zeta::maximal(9, 3), 1), 28);
    EXPECT_EQ(zeta::rational_points(zeta::maximal(9, 3), 2), BigInt(oracle::hermitian_points(4)));
}

TEST(Zeta, JsonRoundTrip) {
    const LPolynomial l = zeta::maximal(9, 3);
    const std::string text = zeta::to_json(l, zeta::effective_counts(l, 4));
    const LPolynomial back = zeta::lpoly_from_json(text);
    EXPECT_EQ(back.q, l.q);
    EXPECT_EQ(back.g, l.g);
    EXPECT_EQ(back.coeffs, l.coeffs);
    EXPECT_EQ(zeta::to_json(back, zeta::effective_counts(back, 4)), text);
    EXPECT_THROW(zeta::lpoly_from_json("{\"q\":"), Error);
}
