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

#include "sigmacode/codes.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>

#include "sigmacode/error.hpp"
#include "sigmacode/rrspace.hpp"

namespace sigmacode {

namespace {

std::string divisor_text(const CurveModel& model, const Divisor& d) {
    if (d.is_zero()) return "0";
    std::string out;
    for (const auto& [p, n] : d.terms()) {
        if (!out.empty()) out += " + ";
        out += std::to_string(n) + "*[" + to_string(model, p) + "]";
    }
    return out;
}

void collect(const std::vector<Place>& places, std::size_t from, unsigned left, Divisor& cur,
             std::vector<Divisor>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t k = from; k < places.size(); ++k) {
        if (places[k].degree > left) continue;
        cur.add(places[k], 1);
        collect(places, k, left - places[k].degree, cur, out);
        cur.add(places[k], -1);
    }
}

}  // namespace

std::string_view to_string(DPolicy p) noexcept {
    return p == DPolicy::Disjoint ? "disjoint" : "allow-rational";
}

DPolicy parse_policy(std::string_view text) {
    if (text == "disjoint") return DPolicy::Disjoint;
    if (text == "allow-rational") return DPolicy::AllowRational;
    throw Error(ErrorCode::InvalidArgument, "unknown D policy '" + std::string(text) + "'");
}

std::optional<long long> SigmaCode::guaranteed_distance() const {
    if (!meta) return std::nullopt;
    return static_cast<long long>(n) - meta->m - 2LL * meta->s - meta->distance_downgrade;
}

Divisor choose_D(const CurveModel& model, long long m, DPolicy policy) {
    if (m < 0) throw Error(ErrorCode::InvalidArgument, "deg D must be nonnegative");
    Divisor d;
    if (m == 0) return d;
    if (m > 1 << 20) throw Error(ErrorCode::TooLarge, "deg D too large");
    if (policy == DPolicy::AllowRational) {
        const auto rp = rational_places(model);
        if (rp.empty()) throw Error(ErrorCode::NoDisjointSupport, "no rational place");
        d.set(rp.front(), static_cast<int>(m));
        return d;
    }
    if (m == 1) throw Error(ErrorCode::NoDisjointSupport, "deg D = 1 needs a rational place");
    const long long b = m % 2;
    const long long a = (m - 3 * b) / 2;
    if (a > 0) {
        const auto p2 = places_of_degree(model, 2);
        if (p2.empty()) throw Error(ErrorCode::NoDisjointSupport, "no place of degree 2");
        d.set(p2.front(), static_cast<int>(a));
    }
    if (b > 0) {
        const auto p3 = places_of_degree(model, 3);
        if (p3.empty()) throw Error(ErrorCode::NoDisjointSupport, "no place of degree 3");
        d.set(p3.front(), static_cast<int>(b));
    }
    return d;
}

std::vector<std::vector<Divisor>> effective_divisors(const CurveModel& model, unsigned s) {
    if (s > 3) throw Error(ErrorCode::UnsupportedS, "s = " + std::to_string(s) + " exceeds 3");
    std::vector<Place> places;
    for (unsigned r = 1; r <= s; ++r)
        for (const Place& p : places_of_degree(model, r)) places.push_back(p);
    std::vector<std::vector<Divisor>> out(s + 1);
    for (unsigned i = 0; i <= s; ++i) {
        Divisor cur;
        collect(places, 0, i, cur, out[i]);
    }
    return out;
}

LPolynomial model_lpoly(const CurveModel& model) {
    const std::uint64_t q = model.base().q();
    switch (model.kind()) {
        case ModelKind::Rational:
            return zeta::rational(q);
        case ModelKind::Hyperelliptic:
            return zeta::elliptic(q, point_count(model, 1));
        case ModelKind::PlaneAffine:
            break;
    }
    throw Error(ErrorCode::UnsupportedModel, "codes need a rational or genus-1 model");
}

SigmaCode build_code(const CurveModel& model, const ConstructionParams& params) {
    const Field& field = model.base();
    if (field.q() > kMaxCodeAlphabet) throw Error(ErrorCode::TooLarge, "q > 254 does not fit the code format");
    if (model.kind() == ModelKind::PlaneAffine)
        throw Error(ErrorCode::UnsupportedModel, "codes need a rational or genus-1 model");
    const std::vector<Place> eval = rational_places(model);
    const long long n = static_cast<long long>(eval.size());
    if (n - params.m - 2LL * params.s <= 0)
        throw Error(ErrorCode::InvalidArgument, "need n - m - 2s > 0");

    const Divisor dd = choose_D(model, params.m, params.policy);
    const auto strata = effective_divisors(model, params.s);
    const auto& top = strata[params.s];

    std::vector<RRBasis> spaces;
    std::uint64_t total = 0;
    for (const Divisor& g : top) {
        spaces.push_back(rr_basis(model, dd + g));
        total += space_size(spaces.back());
        if (total > kEnumerationLimit) throw Error(ErrorCode::TooLarge, "union enumeration exceeds 2^26 functions");
    }

    SigmaCode code;
    code.q = field.q();
    code.n = static_cast<std::uint32_t>(n);
    CodeMetadata meta;
    meta.curve = model.description();
    meta.divisor = divisor_text(model, dd);
    meta.m = params.m;
    meta.s = params.s;
    meta.policy = params.policy;
    meta.genus = model.genus();
    meta.lpoly = model_lpoly(model);
    for (const Place& p : eval)
        if (dd.coefficient(p) != 0) ++meta.distance_downgrade;
    meta.stratum_counts.assign(params.s + 1, 0);

    std::unordered_map<FunctionKey, std::uint64_t, FunctionKeyHash> seen;
    std::vector<Divisor> pole_part;
    std::map<Divisor, std::uint64_t> per_g;

    for (std::size_t gi = 0; gi < top.size(); ++gi) {
        const RRBasis& space = spaces[gi];
        const Divisor bound = dd + top[gi];
        std::vector<Place> places = bound.support();
        std::vector<int> resolve;
        for (const Place& p : places) resolve.push_back(std::max(-dd.coefficient(p), p.degree == 1 ? 1 : 0));
        const std::size_t npole = places.size();
        std::vector<std::size_t> eval_slot;
        for (const Place& p : eval) {
            const auto it = std::find(places.begin(), places.begin() + static_cast<std::ptrdiff_t>(npole), p);
            if (it != places.begin() + static_cast<std::ptrdiff_t>(npole)) {
                eval_slot.push_back(static_cast<std::size_t>(it - places.begin()));
            } else {
                eval_slot.push_back(places.size());
                places.push_back(p);
                resolve.push_back(1);
            }
        }
        const LocalEvaluator ev(space, places, resolve);

        const std::uint64_t count = space_size(space);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            const auto lambda = space_coefficients(space, idx);
            Divisor gf;
            for (std::size_t k = 0; k < npole; ++k) {
                const Place& p = places[k];
                if (const auto v = ev.valuation_below(lambda, k, -dd.coefficient(p)))
                    gf.set(p, -*v - dd.coefficient(p));
            }
            for (const auto& [p, c] : gf.terms())
                if (c > top[gi].coefficient(p))
                    throw Error(ErrorCode::Internal, "function of L(D+G) with pole beyond D+G");

            FunctionKey key = function::key(space.combination(lambda));
            const auto [it, fresh] = seen.try_emplace(std::move(key), pole_part.size());
            if (!fresh) {
                if (pole_part[it->second] != gf)
                    throw Error(ErrorCode::Internal, "exact pole divisor differs between spaces");
                continue;
            }
            pole_part.push_back(gf);
            ++per_g[gf];
            ++meta.stratum_counts[static_cast<std::size_t>(gf.degree())];
            for (std::size_t e = 0; e < eval.size(); ++e) {
                const Symbol sym = ev.value(lambda, eval_slot[e]);
                code.words.push_back(sym ? static_cast<std::uint8_t>(sym->v) : kInfinitySymbol);
            }
        }
    }
    code.words.insert(code.words.end(), code.n, kInfinitySymbol);
    code.has_infinity_word = true;

    std::unordered_map<std::string_view, std::uint64_t> rows;
    const auto* base = reinterpret_cast<const char*>(code.words.data());
    for (std::uint64_t r = 0; r < code.size(); ++r) {
        const auto [it, fresh] = rows.try_emplace(std::string_view(base + r * code.n, code.n), r);
        if (!fresh)
            throw Error(ErrorCode::DuplicateCodeword,
                        "rows " + std::to_string(it->second) + " and " + std::to_string(r) + " coincide");
    }

    if (params.m >= 2LL * model.genus() - 1) {
        for (const auto& stratum : strata)
            for (const Divisor& g : stratum) {
                const auto it = per_g.find(g);
                const BigInt got = it == per_g.end() ? 0 : it->second;
                if (got != exact_pole_count(field.q(), model.genus(), params.m, g))
                    throw Error(ErrorCode::Internal, "|L_D(G)| differs from its closed form for G = " +
                                                         divisor_text(model, g));
            }
        meta.closed_form_checked = true;
    }
    code.meta = std::move(meta);
    return code;
}

AuditReport audit(const SigmaCode& code, const ZetaTable* zeta, const DistanceOptions& opts) {
    if (code.size() < 2) throw Error(ErrorCode::InvalidArgument, "audit needs at least two codewords");
    AuditReport r;
    r.q = code.q;
    r.n = code.n;
    r.M = code.size();
    r.distance = min_distance(code, opts);
    r.injective = r.distance.d > 0;
    r.singleton_cap = ipow(BigInt(code.q + 1), code.n - r.distance.d + 1);
    r.singleton_ok = BigInt(r.M) <= r.singleton_cap;
    r.distance_lower = code.guaranteed_distance();
    if (r.distance_lower) r.distance_ok = static_cast<long long>(r.distance.d) >= *r.distance_lower;
    if (code.meta && zeta) {
        const CodeMetadata& meta = *code.meta;
        const long long g = meta.genus;
        if (zeta->counts.size() <= meta.s) throw Error(ErrorCode::InvalidArgument, "zeta table shorter than s");
        if (meta.m >= g - 1) {
            const BigInt qm = ipow(BigInt(code.q), static_cast<unsigned>(meta.m - g + 1));
            BigInt lower = 1;
            for (unsigned i = 0; i <= meta.s; ++i) {
                const BigInt term = ipow(BigInt(code.q - 1), i) * qm * zeta->counts[i];
                lower += term;
                if (meta.m >= 2 * g - 1 && i < meta.stratum_counts.size()) {
                    const BigInt got = meta.stratum_counts[i];
                    if (i <= 1 ? got != term : got < term) r.strata_ok = false;
                }
            }
            r.size_lower = lower;
            r.size_applicable = meta.m >= 2 * g - 1;
            if (r.size_applicable) r.size_ok = BigInt(r.M) >= lower;
        }
        if (meta.genus == 0 && meta.m == 0) {
            const BigInt qs = ipow(BigInt(code.q), meta.s);
            r.companion_value = qs * qs * code.q + qs * qs - 2 * qs + 2;
        }
    }
    return r;
}

}  // namespace sigmacode
