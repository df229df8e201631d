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

#include "sigmacode/curve.hpp"
#include "sigmacode/curve_parse.hpp"
#include "sigmacode/error.hpp"
#include "sigmacode/function.hpp"
#include "support/oracle.hpp"

using namespace sigmacode;

namespace {

CurveModel model(const char* text, std::uint32_t q) { return parse_curve(text, Field::of_order(q)); }

Place finite_at(const CurveModel& m, long long x) {
    for (const Place& p : rational_places(m))
        if (p.kind == PlaceKind::Finite && p.x == m.base().from_int(x)) return p;
    throw std::logic_error("no place");
}

Poly linear(const Field& f, long long root) { return Poly({f.neg(f.from_int(root)), Field::one()}); }

}  // namespace

TEST(Curve, Genus) {
    EXPECT_EQ(model("rational", 5).genus(), 0u);
    EXPECT_EQ(model("y2=3*(x^4+2)", 5).genus(), 1u);
    EXPECT_EQ(model("y2=x^3+x+1", 5).genus(), 1u);
    EXPECT_EQ(model("affine:y^3+y-x^4:inf=1:g=3", 9).genus(), 3u);
}

TEST(Curve, RejectsUnsupportedModels) {
    EXPECT_THROW(model("y2=x^2+1", 5), Error);          // degree 2
    EXPECT_THROW(model("y2=(x+1)^2*(x+2)^2", 5), Error);  // not squarefree
    EXPECT_THROW(model("y2=x^3+x+1", 8), Error);         // characteristic 2
    EXPECT_THROW(model("banana", 5), Error);
}

TEST(Curve, RationalPlaceCounts) {
    EXPECT_EQ(rational_places(model("rational", 5)).size(), 6u);
    const CurveModel e = model("y2=3*(x^4+2)", 5);
    const auto ps = rational_places(e);
    EXPECT_EQ(ps.size(), 10u);
    for (const Place& p : ps) EXPECT_EQ(p.kind, PlaceKind::Finite);
    ASSERT_EQ(infinite_places(e).size(), 1u);
    EXPECT_EQ(infinite_places(e)[0].degree, 2u);
    const CurveModel f = model("y2=x^4+1", 9);
    const auto qs = rational_places(f);
    EXPECT_EQ(qs.size(), 16u);
    EXPECT_EQ(std::count_if(qs.begin(), qs.end(), [](const Place& p) { return p.kind == PlaceKind::Infinite; }), 2);
}

TEST(Curve, PlacesOfHigherDegree) {
    EXPECT_EQ(places_of_degree(model("y2=3*(x^4+2)", 5), 2).size(), 5u);
    EXPECT_EQ(places_of_degree(model("rational", 5), 2).size(), 10u);
    EXPECT_EQ(places_of_degree(model("rational", 5), 3).size(), 40u);
}

TEST(Curve, PointCountsAgainstOracle) {
    const CurveModel e = model("y2=3*(x^4+2)", 5);
    EXPECT_EQ(point_count(e, 1), 10u);
    EXPECT_EQ(point_count(e, 2), 20u);
    for (unsigned r = 1; r <= 3; ++r)
        EXPECT_EQ(point_count(e, r), oracle::hyperelliptic_points(5, r, {6, 0, 0, 0, 3})) << r;
    const CurveModel c = model("y2=x^3+x+1", 5);
    for (unsigned r = 1; r <= 3; ++r) EXPECT_EQ(point_count(c, r), oracle::hyperelliptic_points(5, r, {1, 1, 0, 1})) << r;
    EXPECT_EQ(point_count(model("y2=x^4+1", 9), 1), 16u);
    EXPECT_EQ(point_count(model("affine:y^3+y-x^4:inf=1:g=3", 9), 1), 28u);
    EXPECT_EQ(oracle::hermitian_points(2), 28u);
}

TEST(Curve, PlaceCountsMatchPointCounts) {
    // N_2 = B_1 + 2 B_2 and N_3 = B_1 + 3 B_3.
    for (const char* text : {"y2=3*(x^4+2)", "y2=x^3+x+1", "y2=x^3+2", "rational"}) {
        const CurveModel m = model(text, 5);
        const std::uint64_t b1 = places_of_degree(m, 1).size();
        EXPECT_EQ(point_count(m, 2), b1 + 2 * places_of_degree(m, 2).size()) << text;
        EXPECT_EQ(point_count(m, 3), b1 + 3 * places_of_degree(m, 3).size()) << text;
    }
}

TEST(Curve, ValuationsOnProjectiveLine) {
    const CurveModel m = model("rational", 5);
    const Field& k = m.base();
    FunctionElt f;
    f.a = poly::pow(k, linear(k, 1), 2);
    f.c = linear(k, -1);
    f = function::canonicalize(k, f);
    EXPECT_EQ(valuation(m, finite_at(m, 1), f), 2);
    EXPECT_EQ(valuation(m, finite_at(m, 4), f), -1);
    EXPECT_EQ(valuation(m, infinite_places(m)[0], f), -1);
    EXPECT_FALSE(valuation(m, finite_at(m, 1), FunctionElt{}).has_value());
}

TEST(Curve, ValuationOfYAtInfinity) {
    const CurveModel m = model("y2=x^4+1", 9);
    for (const Place& p : infinite_places(m)) EXPECT_EQ(valuation(m, p, function::y()), -2);
}

TEST(Curve, Evaluate) {
    const CurveModel m = model("rational", 5);
    const Field& k = m.base();
    FunctionElt pole;
    pole.a = Poly::constant(Field::one());
    pole.c = linear(k, 2);
    pole = function::canonicalize(k, pole);
    EXPECT_FALSE(evaluate(m, pole, finite_at(m, 2)).has_value());
    const FunctionElt g = function::from_poly(k, Poly({Field::one(), Field::zero(), Field::one()}));
    EXPECT_EQ(evaluate(m, g, finite_at(m, 2)), Field::zero());
    const CurveModel e = model("y2=3*(x^4+2)", 5);
    for (const Place& p : rational_places(e)) EXPECT_EQ(evaluate(e, function::y(), p), p.y);
}

TEST(Curve, PrincipalDivisors) {
    const CurveModel m = model("rational", 5);
    const Field& k = m.base();
    FunctionElt f;
    f.a = linear(k, 1);
    f.c = linear(k, 2);
    f = function::canonicalize(k, f);
    const Divisor d = principal_divisor(m, f);
    EXPECT_EQ(d, Divisor::of(finite_at(m, 1)) - Divisor::of(finite_at(m, 2)));
    EXPECT_TRUE(principal_divisor(m, function::constant(k.from_int(3))).is_zero());

    const CurveModel e = model("y2=x^4+1", 9);
    const Divisor dy = principal_divisor(e, function::y());
    EXPECT_EQ(dy.degree(), 0);
    EXPECT_EQ(dy.positive_part().degree(), 4);
    for (const Place& p : infinite_places(e)) EXPECT_EQ(dy.coefficient(p), -2);
}

TEST(Divisor, Algebra) {
    const Place a{1, PlaceKind::Finite, {0}, {0}}, b{1, PlaceKind::Finite, {1}, {0}}, c{2, PlaceKind::Infinite, {}, {}};
    const Divisor g = Divisor::of(a, 2) + Divisor::of(b, -1) + Divisor::of(c);
    const Divisor d = Divisor::of(a, -1) + Divisor::of(b, 3);
    EXPECT_EQ(g.degree(), 3);
    EXPECT_EQ(g.join(d) + g.meet(d), g + d);
    EXPECT_EQ(g.join(d).coefficient(b), 3);
    EXPECT_EQ(g.meet(d).coefficient(a), -1);
    EXPECT_EQ(g.positive_part() - g.negative_part(), g);
    EXPECT_FALSE(g.is_effective());
    EXPECT_TRUE((g - g).is_zero());
    EXPECT_EQ(g.scaled(3).degree(), 9);
}
