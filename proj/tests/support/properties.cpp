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

#include "properties.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sigmacode/codes.hpp"
#include "sigmacode/curve_parse.hpp"
#include "sigmacode/error.hpp"
#include "sigmacode/rrspace.hpp"

namespace properties {

using namespace sigmacode;

namespace {

struct Fixture {
    std::string name;
    CurveModel model;
    std::vector<std::vector<Place>> places;  // index r: places of degree r, r = 1..3
};

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = [] {
        const std::vector<std::pair<std::string, std::uint32_t>> specs{
            {"rational", 5}, {"y2=3*(x^4+2)", 5}, {"y2=x^4+1", 9}, {"y2=x^3+x+1", 5}, {"rational", 7}};
        std::vector<Fixture> out;
        for (const auto& [text, q] : specs) {
            Fixture f{text + "/F_" + std::to_string(q), parse_curve(text, Field::of_order(q)), {}};
            f.places.resize(4);
            for (unsigned r = 1; r <= 3; ++r) f.places[r] = places_of_degree(f.model, r);
            out.push_back(std::move(f));
        }
        return out;
    }();
    return all;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t salt) : gen(kSeed ^ salt) {}
    long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(gen); }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<long long>(v.size()) - 1))]; }
};

Place random_place(Rng& rng, const Fixture& f, unsigned max_degree) {
    for (;;) {
        const auto r = static_cast<unsigned>(rng.uniform(1, max_degree));
        if (!f.places[r].empty()) return rng.pick(f.places[r]);
    }
}

Poly random_poly(Rng& rng, const Field& k, int max_degree) {
    std::vector<Elem> c(static_cast<std::size_t>(rng.uniform(0, max_degree + 1)));
    for (auto& e : c) e = Elem{static_cast<std::uint32_t>(rng.uniform(0, k.q() - 1))};
    return Poly(std::move(c));
}

FunctionElt random_function(Rng& rng, const CurveModel& m, int max_degree) {
    const Field& k = m.base();
    for (;;) {
        FunctionElt f;
        f.a = random_poly(rng, k, max_degree);
        if (m.kind() == ModelKind::Hyperelliptic) f.b = random_poly(rng, k, max_degree);
        f.c = random_poly(rng, k, max_degree);
        if (f.c.is_zero() || f.is_zero()) continue;
        return function::canonicalize(k, std::move(f));
    }
}

void fail(SuiteResult& r, const std::string& why) {
    if (r.failures++ == 0) r.first_failure = why;
}

// Random element of L(D+G) with exact poles on supp G; nullopt if sampling fails.
std::optional<FunctionElt> sample_exact(Rng& rng, const CurveModel& m, const Divisor& d, const Divisor& g,
                                        const RRBasis& space) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Elem> lambda(space.dim());
        for (auto& e : lambda) e = Elem{static_cast<std::uint32_t>(rng.uniform(0, m.base().q() - 1))};
        FunctionElt f = space.combination(lambda);
        bool exact = true;
        for (const auto& [p, n] : g.terms()) {
            const auto v = valuation(m, p, f);
            exact = exact && v && *v == -n - d.coefficient(p);
        }
        if (exact) return f;
    }
    return std::nullopt;
}

}  // namespace

SuiteResult riemann_roch_dimension(int cases) {
    SuiteResult r{"Riemann-Roch dimension law"};
    Rng rng(1);
    while (r.cases < cases) {
        const Fixture& fx = rng.pick(fixtures());
        const long long g = fx.model.genus();
        Divisor a;
        const long long terms = rng.uniform(1, 3);
        for (long long t = 0; t < terms; ++t) {
            long long c = rng.uniform(-2, 3);
            if (c == 0) c = 1;
            a.add(random_place(rng, fx, 3), static_cast<int>(c));
        }
        if (a.degree() < 2 * g - 1 || a.degree() > 9) continue;
        ++r.cases;
        std::ostringstream where;
        where << fx.name << ", deg A = " << a.degree();
        try {
            const RRBasis b = rr_basis(fx.model, a);
            if (static_cast<long long>(b.dim()) != a.degree() - g + 1) {
                fail(r, where.str() + ": dim " + std::to_string(b.dim()));
                continue;
            }
            // Poles of (a + b y)/c lie over zeros of c or at infinity.
            const std::vector<Place> supp = a.support();
            std::set<Place> check(supp.begin(), supp.end());
            for (const Place& p : infinite_places(fx.model)) check.insert(p);
            for (const auto& [pi, e] : factor_small(fx.model, b.denominator))
                for (const Place& p : places_over(fx.model, pi)) check.insert(p);
            for (const FunctionElt& f : b.basis)
                for (const Place& p : check) {
                    const auto v = valuation(fx.model, p, f);
                    if (v && *v < -a.coefficient(p)) fail(r, where.str() + ": basis element has excess pole");
                }
        } catch (const Error& e) {
            fail(r, where.str() + ": " + e.what());
        }
    }
    return r;
}

SuiteResult principal_degree_zero(int cases) {
    SuiteResult r{"principal divisors have degree 0"};
    Rng rng(2);
    int attempts = 0;
    while (r.cases < cases && attempts++ < 50 * cases) {
        const Fixture& fx = rng.pick(fixtures());
        const FunctionElt f = random_function(rng, fx.model, 2);
        try {
            const Divisor d = principal_divisor(fx.model, f);
            ++r.cases;
            if (d.degree() != 0) fail(r, fx.name + ": deg (" + function::to_string(fx.model.base(), f) + ") != 0");
        } catch (const Error& e) {
            if (e.code() != ErrorCode::UnsupportedFactor) {
                ++r.cases;
                fail(r, fx.name + ": " + e.what());
            }
        }
    }
    return r;
}

SuiteResult valuation_additivity(int cases) {
    SuiteResult r{"valuation additivity"};
    Rng rng(3);
    while (r.cases < cases) {
        const Fixture& fx = rng.pick(fixtures());
        const FunctionElt f = random_function(rng, fx.model, 2);
        const FunctionElt g = random_function(rng, fx.model, 2);
        const Place p = random_place(rng, fx, 2);
        ++r.cases;
        try {
            const auto vf = valuation(fx.model, p, f);
            const auto vg = valuation(fx.model, p, g);
            const auto vfg = valuation(fx.model, p, function::mul(fx.model, f, g));
            if (!vf || !vg || !vfg || *vfg != *vf + *vg) fail(r, fx.name + ": nu(fg) != nu(f) + nu(g)");
            const FunctionElt s = function::add(fx.model, f, g);
            if (!s.is_zero()) {
                const auto vs = valuation(fx.model, p, s);
                if (!vs || *vs < std::min(*vf, *vg)) fail(r, fx.name + ": nu(f+g) < min");
            }
            const auto vinv = valuation(fx.model, p, function::inv(fx.model, f));
            if (!vinv || *vinv != -*vf) fail(r, fx.name + ": nu(1/f) != -nu(f)");
        } catch (const Error& e) {
            fail(r, fx.name + ": " + e.what());
        }
    }
    return r;
}

SuiteResult difference_membership(int cases) {
    SuiteResult r{"difference membership"};
    Rng rng(4);
    std::map<std::pair<std::size_t, Divisor>, RRBasis> spaces;
    while (r.cases < cases) {
        const std::size_t fi = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(fixtures().size()) - 1));
        const Fixture& fx = fixtures()[fi];
        const Divisor d = choose_D(fx.model, 2, DPolicy::Disjoint);
        auto random_g = [&] {
            Divisor g;
            const long long kind = rng.uniform(0, 3);
            if (kind >= 1) g.add(rng.pick(fx.places[1]), 1);
            if (kind == 3) g.add(rng.pick(fx.places[1]), 1);
            return g;
        };
        const Divisor g1 = random_g(), g2 = random_g();
        auto space = [&](const Divisor& g) -> const RRBasis& {
            auto key = std::make_pair(fi, g);
            auto it = spaces.find(key);
            if (it == spaces.end()) it = spaces.emplace(key, rr_basis(fx.model, d + g)).first;
            return it->second;
        };
        const auto f1 = sample_exact(rng, fx.model, d, g1, space(g1));
        const auto f2raw = sample_exact(rng, fx.model, d, g2, space(g2));
        if (!f1 || !f2raw) continue;
        const Place p = rng.pick(fx.places[1]);
        const Symbol v1 = evaluate(fx.model, *f1, p), v2 = evaluate(fx.model, *f2raw, p);
        if (!v1 || !v2) continue;
        const Field& k = fx.model.base();
        const FunctionElt f2 = function::add(fx.model, *f2raw, function::constant(k.sub(*v1, *v2)));
        ++r.cases;
        const Divisor bound = d + g1 + g2 - Divisor::of(p);
        const FunctionElt diff = function::sub(fx.model, *f1, f2);
        if (diff.is_zero()) continue;
        std::set<Place> check;
        for (const Place& q : bound.support()) check.insert(q);
        for (const Place& q : infinite_places(fx.model)) check.insert(q);
        for (const Place& q : check) {
            const auto v = valuation(fx.model, q, diff);
            if (v && *v < -bound.coefficient(q)) fail(r, fx.name + ": f1 - f2 leaves L(D+G1+G2-P)");
        }
    }
    return r;
}

SuiteResult exact_pole_disjointness(int cases) {
    SuiteResult r{"exact-pole disjointness"};
    Rng rng(5);
    struct Setup {
        CurveModel model;
        Divisor d;
        std::vector<Divisor> gs;
        std::vector<std::unordered_set<FunctionKey, FunctionKeyHash>> keys;
    };
    std::vector<Setup> setups;
    const std::vector<std::tuple<std::string, std::uint32_t, long long>> params{
        {"rational", 3, 0}, {"rational", 5, 2}, {"y2=3*(x^4+2)", 5, 2}, {"y2=x^3+x+1", 5, 2}};
    for (const auto& [text, q, m] : params) {
        Setup s{parse_curve(text, Field::of_order(q)), {}, {}, {}};
        s.d = choose_D(s.model, m, DPolicy::Disjoint);
        for (const auto& stratum : effective_divisors(s.model, 1))
            for (const Divisor& g : stratum) s.gs.push_back(g);
        for (const Divisor& g : s.gs) {
            const RRBasis space = rr_basis(s.model, s.d + g);
            std::unordered_set<FunctionKey, FunctionKeyHash> ks;
            const auto subset = exact_pole_subset(s.model, s.d, g, space);
            for (const FunctionElt& f : subset) ks.insert(function::key(f));
            if (BigInt(subset.size()) != exact_pole_count(s.model.base().q(), s.model.genus(), m, g))
                fail(r, text + ": |L_D(G)| differs from the closed form");
            s.keys.push_back(std::move(ks));
        }
        setups.push_back(std::move(s));
    }
    while (r.cases < cases) {
        const Setup& s = rng.pick(setups);
        const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(s.gs.size()) - 1));
        const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(s.gs.size()) - 1));
        if (i == j) continue;
        ++r.cases;
        for (const auto& k : s.keys[i])
            if (s.keys[j].count(k)) {
                fail(r, s.model.description() + ": L_D(G1) and L_D(G2) intersect");
                break;
            }
    }
    return r;
}

SuiteResult join_meet_identity(int cases) {
    SuiteResult r{"(G meet D) + (G join D) = G + D"};
    Rng rng(6);
    while (r.cases < cases) {
        const Fixture& fx = rng.pick(fixtures());
        Divisor g, d;
        for (int t = 0; t < 4; ++t) {
            g.add(random_place(rng, fx, 3), static_cast<int>(rng.uniform(-3, 3)));
            d.add(random_place(rng, fx, 3), static_cast<int>(rng.uniform(-3, 3)));
        }
        ++r.cases;
        if (g.meet(d) + g.join(d) != g + d) fail(r, fx.name + ": lattice identity fails");
        if (g.meet(d).degree() + g.join(d).degree() != g.degree() + d.degree()) fail(r, fx.name + ": degree identity fails");
    }
    return r;
}

SuiteResult singleton_on_audits(int cases) {
    SuiteResult r{"Singleton cap on audited codes"};
    Rng rng(7);
    std::vector<SigmaCode> codes;
    const std::vector<std::tuple<std::string, std::uint32_t, long long, unsigned>> params{
        {"rational", 3, 0, 1}, {"rational", 5, 0, 1}, {"rational", 5, 2, 1}, {"y2=3*(x^4+2)", 5, 2, 1},
        {"y2=x^3+x+1", 5, 2, 1}, {"rational", 7, 2, 2}};
    for (const auto& [text, q, m, s] : params)
        codes.push_back(build_code(parse_curve(text, Field::of_order(q)), {m, s, DPolicy::Disjoint}));
    while (r.cases < cases) {
        const SigmaCode& full = rng.pick(codes);
        SigmaCode sub;
        sub.q = full.q;
        sub.n = full.n;
        sub.has_infinity_word = false;
        sub.meta = full.meta;
        const auto rows = rng.uniform(2, static_cast<long long>(std::min<std::uint64_t>(full.size(), 400)));
        std::set<std::uint64_t> chosen;
        while (static_cast<long long>(chosen.size()) < rows)
            chosen.insert(static_cast<std::uint64_t>(rng.uniform(0, static_cast<long long>(full.size()) - 1)));
        for (std::uint64_t i : chosen) {
            const auto row = full.row(i);
            sub.words.insert(sub.words.end(), row.begin(), row.end());
        }
        ++r.cases;
        const AuditReport rep = audit(sub, nullptr);
        if (!rep.singleton_ok) fail(r, "subcode of size " + std::to_string(rows) + " breaks Singleton");
        if (!rep.distance_ok || !rep.injective) fail(r, "subcode below the guaranteed distance");
    }
    return r;
}

std::vector<SuiteResult> all(int cases) {
    return {riemann_roch_dimension(cases), principal_degree_zero(cases), valuation_additivity(cases),
            difference_membership(cases),     exact_pole_disjointness(cases),  join_meet_identity(cases),
            singleton_on_audits(cases)};
}

}  // namespace properties
