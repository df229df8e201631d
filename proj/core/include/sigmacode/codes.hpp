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


#ifndef SIGMACODE_CODES_HPP
#define SIGMACODE_CODES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigmacode/bigint.hpp"
#include "sigmacode/curve.hpp"
#include "sigmacode/zeta.hpp"

namespace sigmacode {

enum class DPolicy { Disjoint, AllowRational };

std::string_view to_string(DPolicy p) noexcept;
/// "disjoint" or "allow-rational"; throws InvalidArgument otherwise.
DPolicy parse_policy(std::string_view text);

struct ConstructionParams {
    long long m = 0;
    unsigned s = 0;
    DPolicy policy = DPolicy::Disjoint;
};

inline constexpr std::uint8_t kInfinitySymbol = 0xFF;
inline constexpr std::uint32_t kMaxCodeAlphabet = 254;

/// Metadata carried next to the symbol matrix; absent for codes read from a
/// bare SIGC file.
struct CodeMetadata {
    std::string curve;
    std::string divisor;  // D, human readable
    long long m = 0;
    unsigned s = 0;
    DPolicy policy = DPolicy::Disjoint;
    unsigned genus = 0;
    /// |supp D ∩ evaluation places|; lowers the guaranteed distance.
    unsigned distance_downgrade = 0;
    LPolynomial lpoly;
    /// Distinct nonzero-or-zero functions grouped by the degree of their exact pole divisor G_f.
    std::vector<std::uint64_t> stratum_counts;
    /// Whether every L_D(G) matched its closed-form size (only checked when m >= 2g - 1).
    bool closed_form_checked = false;
};

/// Row-major M x n matrix over {0..q-1} ∪ {kInfinitySymbol}.
struct SigmaCode {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    bool has_infinity_word = true;
    std::vector<std::uint8_t> words;
    std::optional<CodeMetadata> meta;

    std::uint64_t size() const noexcept { return n == 0 ? 0 : words.size() / n; }
    std::span<const std::uint8_t> row(std::uint64_t i) const noexcept { return {words.data() + i * n, n}; }
    /// n - m - 2s - downgrade, or nullopt without metadata.
    std::optional<long long> guaranteed_distance() const;
};

/// Effective divisor of degree m for the chosen policy.
///
/// Disjoint: a copies of the first degree-2 place plus b of the first degree-3
/// place, m = 2a + 3b with b minimal. AllowRational: m times the first rational place.
Divisor choose_D(const CurveModel& model, long long m, DPolicy policy);

/// All effective divisors of degree exactly i for i = 0..s (s <= 3), stratum by stratum.
std::vector<std::vector<Divisor>> effective_divisors(const CurveModel& model, unsigned s);

/// Zeta data of a supported model: rational or genus-1 from the point count.
LPolynomial model_lpoly(const CurveModel& model);

SigmaCode build_code(const CurveModel& model, const ConstructionParams& params);

struct DistanceOptions {
    unsigned workers = 1;
    /// Disables the per-pair early exit.
    bool exact_profile = false;
};

struct DistanceResult {
    std::uint32_t d = 0;
    /// Lexicographically smallest pair (i < j) attaining d.
    std::uint64_t i = 0;
    std::uint64_t j = 0;
    std::uint64_t pairs = 0;
};

/// Exact minimum Hamming distance; M >= 2.
DistanceResult min_distance(const SigmaCode& code, const DistanceOptions& opts = {});

struct AuditReport {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    std::uint64_t M = 0;
    DistanceResult distance;
    /// 1 + sum_{i<=s} (q-1)^i q^{m-g+1} A_i when m >= g - 1.
    std::optional<BigInt> size_lower;
    /// The size bound is a theorem only for m >= 2g - 1.
    bool size_applicable = false;
    std::optional<long long> distance_lower;
    BigInt singleton_cap;
    bool injective = false;
    bool size_ok = true;
    bool distance_ok = true;
    bool singleton_ok = true;
    bool strata_ok = true;
    /// Rational model with D = 0: q^{2s+1} + q^{2s} - 2q^s + 2 versus the enumerated size.
    std::optional<BigInt> companion_value;
    bool passed() const noexcept { return injective && size_ok && distance_ok && singleton_ok && strata_ok; }
};

/// zeta may be null; size checks need metadata and zeta counts up to s.
AuditReport audit(const SigmaCode& code, const ZetaTable* zeta, const DistanceOptions& opts = {});

namespace sigc {
std::vector<std::uint8_t> encode(const SigmaCode& code);
SigmaCode decode(std::span<const std::uint8_t> bytes);
void write(const SigmaCode& code, const std::string& path);
SigmaCode read(const std::string& path);
/// Metadata sidecar as JSON (stable key order).
std::string metadata_json(const CodeMetadata& meta);
CodeMetadata metadata_from_json(const std::string& text);
}  // namespace sigc

}  // namespace sigmacode

#endif
