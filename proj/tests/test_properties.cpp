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

#include "support/properties.hpp"

namespace {

constexpr int kCases = 120;

void check(const properties::SuiteResult& r) {
    EXPECT_GE(r.cases, 100) << r.name;
    EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}

}  // namespace

TEST(Properties, RiemannRochDimension) { check(properties::riemann_roch_dimension(kCases)); }
TEST(Properties, PrincipalDegreeZero) { check(properties::principal_degree_zero(kCases)); }
TEST(Properties, ValuationAdditivity) { check(properties::valuation_additivity(kCases)); }
TEST(Properties, DifferenceLiesInSmallerSpace) { check(properties::difference_membership(kCases)); }
TEST(Properties, ExactPoleDisjointness) { check(properties::exact_pole_disjointness(kCases)); }
TEST(Properties, JoinMeetIdentity) { check(properties::join_meet_identity(kCases)); }
TEST(Properties, SingletonOnAudits) { check(properties::singleton_on_audits(kCases)); }
