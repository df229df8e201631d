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

#include "sigmacode/zeta.hpp"

#include <json.hpp>

#include "sigmacode/error.hpp"
#include "sigmacode/gf.hpp"

namespace sigmacode::zeta {

namespace {

void require_prime_power(std::uint64_t q) {
    if (!prime_power(q)) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

LPolynomial rational(std::uint64_t q) {
    require_prime_power(q);
    return {q, 0, {BigInt(1)}};
}

LPolynomial elliptic(std::uint64_t q, std::uint64_t n) {
    require_prime_power(q);
    const BigInt a1 = BigInt(n) - q - 1;
    if (a1 * a1 > 4 * BigInt(q))
        throw Error(ErrorCode::HasseWeilViolation,
                    "N = " + std::to_string(n) + " is outside the Hasse-Weil interval for q = " + std::to_string(q));
    return {q, 1, {BigInt(1), a1, BigInt(q)}};
}

LPolynomial maximal(std::uint64_t q, unsigned g) {
    require_prime_power(q);
    const BigInt r = isqrt(BigInt(q));
    if (g > 0 && r * r != q) throw Error(ErrorCode::NotASquare, std::to_string(q) + " is not a square");
    LPolynomial l{q, g, {}};
    for (unsigned j = 0; j <= 2 * g; ++j) l.coeffs.push_back(binomial(2 * g, j) * ipow(r, j));
    return l;
}

LPolynomial custom(std::uint64_t q, std::vector<BigInt> coeffs) {
    require_prime_power(q);
    if (coeffs.empty() || coeffs.size() % 2 == 0)
        throw Error(ErrorCode::FunctionalEquation, "L-polynomial needs 2g+1 coefficients");
    if (coeffs[0] != 1) throw Error(ErrorCode::FunctionalEquation, "a_0 must be 1");
    const unsigned g = static_cast<unsigned>((coeffs.size() - 1) / 2);
    for (unsigned j = 0; j <= g; ++j)
        if (coeffs[2 * g - j] != ipow(BigInt(q), g - j) * coeffs[j])
            throw Error(ErrorCode::FunctionalEquation, "a_" + std::to_string(2 * g - j) + " != q^" +
                                                           std::to_string(g - j) + " * a_" + std::to_string(j));
    return {q, g, std::move(coeffs)};
}

ZetaTable effective_counts(const LPolynomial& l, unsigned imax) {
    if (imax > kMaxDegree) throw Error(ErrorCode::InvalidArgument, "imax must be <= 64");
    ZetaTable t{l.q, l.g, {}};
    const BigInt q = l.q;
    for (unsigned i = 0; i <= imax; ++i) {
        BigInt sum = 0;
        const unsigned jmax = std::min<unsigned>(i, 2 * l.g);
        for (unsigned j = 0; j <= jmax && j < l.coeffs.size(); ++j)
            sum += (ipow(q, i + 1 - j) - 1) / (q - 1) * l.coeffs[j];
        t.counts.push_back(sum);
    }
    return t;
}

BigInt rational_points(const LPolynomial& l, unsigned r) {
    // Power sums S_k of the reciprocal roots by Newton's identities.
    std::vector<BigInt> s(r + 1, 0);
    auto a = [&](unsigned k) { return k < l.coeffs.size() ? l.coeffs[k] : BigInt(0); };
    for (unsigned k = 1; k <= r; ++k) {
        BigInt acc = -BigInt(k) * a(k);
        for (unsigned i = 1; i < k; ++i) acc -= a(i) * s[k - i];
        s[k] = acc;
    }
    return ipow(BigInt(l.q), r) + 1 - s[r];
}

std::string to_json(const LPolynomial& l, const ZetaTable& t) {
    nlohmann::ordered_json j;
    j["q"] = l.q;
    j["g"] = l.g;
    j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& c : l.coeffs) j["coeffs"].push_back(c.str());
    j["counts"] = nlohmann::ordered_json::array();
    for (const auto& c : t.counts) j["counts"].push_back(c.str());
    return j.dump(2);
}

LPolynomial lpoly_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("zeta JSON: ") + e.what());
    }
    if (!j.contains("q") || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw Error(ErrorCode::ParseError, "zeta JSON needs \"q\" and \"coeffs\"");
    std::vector<BigInt> coeffs;
    for (const auto& c : j["coeffs"]) {
        try {
            coeffs.emplace_back(c.is_string() ? c.get<std::string>() : std::to_string(c.get<long long>()));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad coefficient in zeta JSON");
        }
    }
    return custom(j["q"].get<std::uint64_t>(), std::move(coeffs));
}

}  // namespace sigmacode::zeta
