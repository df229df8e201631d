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

#include "sigmacode/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "resources.hpp"
#include "sigmacode/error.hpp"
#include "sigmacode/gf.hpp"

namespace sigmacode::bounds {

std::string_view to_string(Mode m) noexcept { return m == Mode::Strict ? "strict" : "paper"; }

Mode parse_mode(std::string_view text) {
    if (text == "strict") return Mode::Strict;
    if (text == "paper") return Mode::Paper;
    throw Error(ErrorCode::InvalidArgument, "unknown mode '" + std::string(text) + "'");
}

BigInt size_lower_bound(std::uint64_t q, unsigned g, const ZetaTable& zeta, long long m, unsigned s) {
    if (m < static_cast<long long>(g) - 1) throw Error(ErrorCode::InvalidArgument, "m < g - 1");
    if (s >= zeta.counts.size()) throw Error(ErrorCode::InvalidArgument, "zeta table shorter than s");
    const BigInt qm = ipow(q, static_cast<unsigned>(m - g + 1));
    BigInt sum = 0;
    BigInt w = 1;
    for (unsigned i = 0; i <= s; ++i) {
        sum += w * zeta.counts[i];
        w *= q - 1;
    }
    return 1 + qm * sum;
}

ZetaTable zeta_for_length(const LPolynomial& l, long long n) {
    const long long imax = std::clamp<long long>(n / 2 + 1, 2, zeta::kMaxDegree);
    return zeta::effective_counts(l, static_cast<unsigned>(imax));
}

Optimum optimize(const BoundQuery& qr) {
    if (qr.d < 1 || qr.d > qr.n) throw Error(ErrorCode::InvalidArgument, "need 1 <= d <= n");
    const long long g = qr.g;
    const long long lo = qr.mode == Mode::Strict ? std::max(0LL, 2 * g - 1) : std::max(0LL, g - 1);
    const long long hi = qr.n - qr.d;
    if (lo > hi)
        throw Error(ErrorCode::EmptyDomain, "no m in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    std::optional<Optimum> best;
    for (long long m = lo; m <= hi; ++m) {
        long long s = (hi - m) / 2;
        if (qr.mode == Mode::Paper) s = std::min(s, 2LL);
        BigInt v = size_lower_bound(qr.q, qr.g, qr.zeta, m, static_cast<unsigned>(s));
        if (!best || v > best->size) best = Optimum{m, static_cast<unsigned>(s), std::move(v)};
    }
    return *best;
}

BigInt singleton_cap(std::uint64_t alphabet, long long n, long long d) {
    if (d < 1 || d > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= d <= n");
    return ipow(alphabet, static_cast<unsigned>(n - d + 1));
}

std::pair<BigInt, long long> rule_extension(const BigInt& size, long long d) { return {size, d}; }

BigInt rule_restriction(const BigInt& size, std::uint64_t r, std::uint64_t s, long long n) {
    if (r < 1 || r >= s) throw Error(ErrorCode::BadAlphabets, "restriction needs 1 <= r < s");
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative length");
    return ceil_div(size * ipow(r, static_cast<unsigned>(n)), ipow(s, static_cast<unsigned>(n)));
}

std::pair<BigInt, long long> rule_multiplication(const BigInt& m1, const BigInt& m2, long long d1, long long d2) {
    return {m1 * m2, std::min(d1, d2)};
}

std::pair<BigInt, BigInt> hasse_weil(std::uint64_t q, unsigned g) {
    if (!prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q));
    const BigInt w = isqrt(BigInt(4) * g * g * q);
    return {BigInt(q) + 1 - w, BigInt(q) + 1 + w};
}

bool is_exceptional(std::uint64_t q) {
    const auto pp = prime_power(q);
    if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q));
    const auto [p, a] = *pp;
    const BigInt w = isqrt(BigInt(4) * q);
    return a >= 3 && a % 2 == 1 && w % p == 0;
}

std::uint64_t nq1(std::uint64_t q) {
    const bool exc = is_exceptional(q);
    const auto w = isqrt(BigInt(4) * q).convert_to<std::uint64_t>();
    return exc ? q + w : q + 1 + w;
}

ComparisonReport compare(std::uint64_t q, unsigned g, long long n, long long d, const BigInt& size) {
    if (d < 1 || d > n) throw Error(ErrorCode::InvalidArgument, "need 1 <= d <= n");
    ComparisonReport r;
    r.size = size;
    const BigInt upper = hasse_weil(q, g).second;
    const long long gg = g;

    Claim& ext = r.extension;
    ext.name = "alphabet extension";
    ext.in_range = d >= 2 && d <= n - std::max(gg, 1LL) && BigInt(n) <= upper && n - gg + 1 - d >= 0;
    ext.hypothesis = true;
    if (n - gg + 1 - d >= 0) {
        ext.compared_to = ipow(q, static_cast<unsigned>(n - gg + 1 - d));
        ext.conclusion = size > ext.compared_to;
    }
    ext.detail = "size > q^(n-g+1-d)";

    // d >= 1 - g + n ln(1+1/q)/ln(1+2/q)  <=>  (q+2)^e q^n >= (q+1)^n q^e with e = d+g-1.
    Claim& res = r.restriction;
    const auto e = static_cast<unsigned>(d + gg - 1);
    const auto nn = static_cast<unsigned>(n);
    res.name = "restriction from (q+2)-ary";
    res.in_range = BigInt(n) >= q + 1 && BigInt(n) <= upper;
    res.hypothesis = ipow(q + 2, e) * ipow(q, nn) >= ipow(q + 1, nn) * ipow(q, e);
    res.compared_to = ceil_div(ipow(q + 1, nn), ipow(q + 2, e));
    res.conclusion = size * ipow(q + 2, e) > ipow(q + 1, nn);
    res.detail = "size > (q+1)^n / (q+2)^(d+g-1)";

    Claim& mds = r.mds_restriction;
    std::uint64_t a = 1;
    while (!prime_power(q + a) || static_cast<long long>(q + a) < n - 1) ++a;
    r.a = a;
    mds.name = "restriction from (q+a)-ary MDS";
    mds.in_range = g == 1 && BigInt(n) >= q + 1 && static_cast<std::uint64_t>(n) <= nq1(q);
    const auto dd = static_cast<unsigned>(d);
    mds.hypothesis = ipow(q + a, dd) * ipow(q, nn) >= ipow(q + 1, nn) * (q + a) * ipow(q, dd);
    mds.compared_to = ceil_div(ipow(q + 1, nn), ipow(q + a, dd - 1));
    mds.conclusion = size * ipow(q + a, dd - 1) > ipow(q + 1, nn);
    mds.detail = "size > (q+1)^n / (q+a)^(d-1), a = " + std::to_string(a);
    return r;
}

std::vector<BestKnownEntry> parse_best_known(std::string_view text) {
    std::vector<BestKnownEntry> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        BestKnownEntry e;
        std::string size;
        if (!(fields >> e.alphabet >> e.n >> e.d >> size))
            throw Error(ErrorCode::ParseError, "best-known line " + std::to_string(lineno));
        std::getline(fields >> std::ws, e.note);
        try {
            e.size = BigInt(size);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "best-known size '" + size + "'");
        }
        if (e.d < 1 || e.d > e.n || e.size < 1 || e.size > singleton_cap(e.alphabet, e.n, e.d))
            throw Error(ErrorCode::InvalidArgument, "best-known line " + std::to_string(lineno) + " breaks Singleton");
        out.push_back(std::move(e));
    }
    return out;
}

const std::vector<BestKnownEntry>& best_known() {
    static const std::vector<BestKnownEntry> table = parse_best_known(resources::bestknown_table());
    return table;
}

const BestKnownEntry& best_known(std::uint64_t alphabet, long long n, long long d) {
    for (const auto& e : best_known())
        if (e.alphabet == alphabet && e.n == n && e.d == d) return e;
    throw Error(ErrorCode::InvalidArgument, "no best-known entry for (" + std::to_string(alphabet) + ", " +
                                                std::to_string(n) + ", " + std::to_string(d) + ")");
}

}  // namespace sigmacode::bounds
