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


#ifndef SIGMACODE_BOUNDS_HPP
#define SIGMACODE_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigmacode/bigint.hpp"
#include "sigmacode/zeta.hpp"

namespace sigmacode::bounds {

enum class Mode { Strict, Paper };

std::string_view to_string(Mode m) noexcept;
/// "strict" or "paper"; throws InvalidArgument otherwise.
Mode parse_mode(std::string_view text);

/// 1 + sum_{i=0}^{s} (q-1)^i q^{m-g+1} A_i; needs m >= g - 1 and s < zeta.counts.size().
BigInt size_lower_bound(std::uint64_t q, unsigned g, const ZetaTable& zeta, long long m, unsigned s);

struct BoundQuery {
    std::uint64_t q = 0;
    unsigned g = 0;
    ZetaTable zeta;
    long long n = 0;
    long long d = 0;
    Mode mode = Mode::Strict;
};

struct Optimum {
    long long m = 0;
    unsigned s = 0;
    BigInt size;
};

/// Strict: m in [max(0, 2g-1), n-d], s = floor((n-d-m)/2).
/// Paper: m in [max(0, g-1), n-d], s = min(2, floor((n-d-m)/2)).
/// Ties go to the smallest m. Throws EmptyDomain.
Optimum optimize(const BoundQuery& query);

/// Counts long enough for every s that optimize can reach.
ZetaTable zeta_for_length(const LPolynomial& l, long long n);

BigInt singleton_cap(std::uint64_t alphabet, long long n, long long d);

std::pair<BigInt, long long> rule_extension(const BigInt& size, long long d);
/// ceil(size * r^n / s^n); needs 1 <= r < s.
BigInt rule_restriction(const BigInt& size, std::uint64_t r, std::uint64_t s, long long n);
std::pair<BigInt, long long> rule_multiplication(const BigInt& m1, const BigInt& m2, long long d1, long long d2);

/// Closed interval [q + 1 - floor(2g sqrt q), q + 1 + floor(2g sqrt q)].
std::pair<BigInt, BigInt> hasse_weil(std::uint64_t q, unsigned g);
/// q = p^a with a >= 3 odd and p | floor(2 sqrt q).
bool is_exceptional(std::uint64_t q);
/// Maximal number of rational points on a genus-1 curve over F_q.
std::uint64_t nq1(std::uint64_t q);

/// Claim with hypothesis and conclusion decided in exact arithmetic.
struct Claim {
    std::string name;
    bool in_range = true;  // length condition of the statement
    bool hypothesis = false;
    bool conclusion = false;
    BigInt compared_to;  // the competing size or its numerator
    std::string detail;
    /// The statement says hypothesis => conclusion; only its failure is a violation.
    bool violated() const noexcept { return in_range && hypothesis && !conclusion; }
};

struct ComparisonReport {
    BigInt size;
    Claim extension;    // size > q^{n-g+1-d}
    Claim restriction;  // size > (q+1)^n / (q+2)^{d+g-1} when d >= 1-g+n ln(1+1/q)/ln(1+2/q)
    Claim mds_restriction;  // size > (q+1)^n / (q+a)^{d-1} for the least suitable prime power q+a
    std::uint64_t a = 0;
};

/// size is the guaranteed code size being compared (normally optimize's M_lower).
ComparisonReport compare(std::uint64_t q, unsigned g, long long n, long long d, const BigInt& size);

struct BestKnownEntry {
    std::uint64_t alphabet = 0;
    long long n = 0;
    long long d = 0;
    BigInt size;
    std::string note;
};

/// Parses the tab-separated dataset; rejects entries above the Singleton cap.
std::vector<BestKnownEntry> parse_best_known(std::string_view text);
/// Shipped dataset.
const std::vector<BestKnownEntry>& best_known();
/// Throws InvalidArgument when absent.
const BestKnownEntry& best_known(std::uint64_t alphabet, long long n, long long d);

}  // namespace sigmacode::bounds

#endif
