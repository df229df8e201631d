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

#include "sigmacode/rrspace.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sigmacode/error.hpp"
#include "sigmacode/linalg.hpp"

namespace sigmacode {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Pole order of x at infinity: 2 on cubic models, 1 otherwise.
int x_pole_order(const CurveModel& m) {
    return m.kind() == ModelKind::Hyperelliptic && m.h().degree() == 3 ? 2 : 1;
}

int denominator_order(const CurveModel& m, const Place& p, const Poly& c) {
    if (p.kind == PlaceKind::Infinite) return -c.degree() * x_pole_order(m);
    const Poly pi = x_polynomial(m, p);
    return static_cast<int>(ramification(m, p) * poly::multiplicity(m.base(), c, pi));
}

struct Monomials {
    std::vector<Laurent> series;  // x^0..x^da, then x^0 y..x^db y
    int emin = 0;
    int cutoff = 0;
};

Monomials monomial_series(const CurveModel& m, const Place& p, int da, int db, int prec) {
    const auto lc = m.local_coordinates(p, prec);
    const Field& k = m.extension(p.degree).field();
    Monomials out;
    const int top = std::max(da, db);
    std::vector<Laurent> xp;
    Laurent cur = series::constant(Field::one(), prec);
    for (int i = 0; i <= top; ++i) {
        xp.push_back(cur);
        cur = series::mul(k, cur, lc->x);
    }
    for (int i = 0; i <= da; ++i) out.series.push_back(xp[static_cast<std::size_t>(i)]);
    for (int j = 0; j <= db; ++j) out.series.push_back(series::mul(k, xp[static_cast<std::size_t>(j)], lc->y));
    out.emin = 0;
    out.cutoff = 1 << 30;
    for (const auto& s : out.series) {
        out.emin = std::min(out.emin, s.val);
        out.cutoff = std::min(out.cutoff, s.cutoff());
    }
    return out;
}

bool expected_dimension_ok(const CurveModel& m, const Divisor& a, std::size_t dim) {
    const long long deg = a.degree();
    const long long g = m.genus();
    if (deg < 0) return dim == 0;
    if (a.is_zero()) return dim == 1;
    if (deg >= 2 * g - 1) return static_cast<long long>(dim) == deg - g + 1;
    return static_cast<long long>(dim) >= deg - g + 1 && static_cast<long long>(dim) <= deg + 1;
}

}  // namespace

FunctionElt RRBasis::combination(std::span<const Elem> lambda) const {
    const Field& f = model.base();
    FunctionElt out;
    for (std::size_t i = 0; i < numerators.size(); ++i) {
        if (lambda[i] == Field::zero()) continue;
        out.a = poly::add(f, out.a, poly::scale(f, numerators[i].first, lambda[i]));
        out.b = poly::add(f, out.b, poly::scale(f, numerators[i].second, lambda[i]));
    }
    out.c = denominator;
    return function::canonicalize(f, std::move(out));
}

RRBasis rr_basis(const CurveModel& m, const Divisor& a) {
    if (m.kind() == ModelKind::PlaneAffine)
        throw Error(ErrorCode::UnsupportedModel, "Riemann-Roch spaces need a rational or y^2 = h(x) model");
    for (const auto& [p, n] : a.terms())
        if (p.degree > 3) throw Error(ErrorCode::UnsupportedSupport, "place of degree " + std::to_string(p.degree));
    const Field& f = m.base();

    // Universal denominator.
    std::map<Poly, unsigned> exps;
    for (const auto& [p, n] : a.terms()) {
        if (n <= 0 || p.kind != PlaceKind::Finite) continue;
        const unsigned e = ramification(m, p);
        const unsigned need = (static_cast<unsigned>(n) + e - 1) / e;
        auto& slot = exps[x_polynomial(m, p)];
        slot = std::max(slot, need);
    }
    Poly c = Poly::constant(Field::one());
    for (const auto& [pi, e] : exps) c = poly::mul(f, c, poly::pow(f, pi, e));

    // Degree bounds for a and b from the pole allowance at infinity.
    const auto inf = infinite_places(m);
    int ninf = a.coefficient(inf.front());
    for (const Place& p : inf) ninf = std::max(ninf, a.coefficient(p));
    const long long dc = c.degree();
    long long da = 0, db = -1;
    if (m.kind() == ModelKind::Rational) {
        da = dc + ninf;
    } else if (m.h().degree() == 4) {
        da = dc + ninf;
        db = dc + ninf - 2;
    } else {
        da = floor_div(2 * dc + ninf, 2);
        db = floor_div(2 * dc + ninf - 3, 2);
    }
    da = std::max(da, -1LL);
    db = std::max(db, -1LL);

    RRBasis out{m, a, c, {}, {}};
    const std::size_t ncols = static_cast<std::size_t>(da + 1 + db + 1);
    if (ncols == 0) {
        if (!expected_dimension_ok(m, a, 0))
            throw Error(ErrorCode::DimensionMismatch, "empty ansatz for a divisor with sections");
        return out;
    }

    // Places where the valuation condition can bind.
    std::set<Place> sites(inf.begin(), inf.end());
    for (const auto& [pi, e] : exps)
        for (const Place& p : places_over(m, pi)) sites.insert(p);
    for (const auto& [p, n] : a.terms())
        if (n < 0) sites.insert(p);

    std::vector<linalg::Row> rows;
    for (const Place& p : sites) {
        const int target = denominator_order(m, p, c) - a.coefficient(p);
        const Extension& ext = m.extension(p.degree);
        Monomials mono;
        for (int prec = 16;; prec *= 2) {
            if (prec > 4096) throw Error(ErrorCode::PrecisionExceeded, "local conditions need excessive precision");
            mono = monomial_series(m, p, static_cast<int>(da), static_cast<int>(db), prec);
            if (mono.cutoff >= target + 2) break;
        }
        for (int e = mono.emin; e < target; ++e) {
            std::vector<linalg::Row> coord_rows(p.degree, linalg::Row(ncols));
            for (std::size_t col = 0; col < ncols; ++col) {
                const auto coords = ext.coordinates(series::coeff(mono.series[col], e));
                for (unsigned j = 0; j < p.degree; ++j) coord_rows[j][col] = coords[j];
            }
            for (auto& r : coord_rows)
                if (std::any_of(r.begin(), r.end(), [](Elem x) { return x != Field::zero(); })) rows.push_back(std::move(r));
        }
    }

    for (const auto& v : linalg::kernel(f, std::move(rows), ncols)) {
        std::vector<Elem> av(v.begin(), v.begin() + (da + 1));
        std::vector<Elem> bv(v.begin() + (da + 1), v.end());
        out.numerators.emplace_back(Poly(std::move(av)), Poly(std::move(bv)));
        FunctionElt fe{out.numerators.back().first, out.numerators.back().second, c};
        out.basis.push_back(function::canonicalize(f, std::move(fe)));
    }
    if (!expected_dimension_ok(m, a, out.dim()))
        throw Error(ErrorCode::DimensionMismatch, "dim L(A) = " + std::to_string(out.dim()) + " for deg A = " +
                                                      std::to_string(a.degree()));
    return out;
}

std::uint64_t space_size(const RRBasis& b) {
    const std::uint64_t q = b.model.base().q();
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        size *= q;
        if (size > kEnumerationLimit)
            throw Error(ErrorCode::TooLarge, "q^dim exceeds 2^26 (dim " + std::to_string(b.dim()) + ")");
    }
    return size;
}

std::vector<Elem> space_coefficients(const RRBasis& b, std::uint64_t idx) {
    const std::uint64_t q = b.model.base().q();
    std::vector<Elem> lambda(b.dim());
    for (auto& l : lambda) {
        l = Elem{static_cast<std::uint32_t>(idx % q)};
        idx /= q;
    }
    return lambda;
}

void space_enumerate(const RRBasis& b, const std::function<void(std::uint64_t, const FunctionElt&)>& visit) {
    const std::uint64_t total = space_size(b);
    for (std::uint64_t idx = 0; idx < total; ++idx) visit(idx, b.combination(space_coefficients(b, idx)));
}

std::vector<FunctionElt> exact_pole_subset(const CurveModel& m, const Divisor& d, const Divisor& g,
                                           const RRBasis& space) {
    std::vector<FunctionElt> out;
    space_enumerate(space, [&](std::uint64_t, const FunctionElt& f) {
        if (f.is_zero()) {
            if (g.is_zero()) out.push_back(f);
            return;
        }
        for (const auto& [q, n] : g.terms()) {
            const auto v = valuation(m, q, f);
            if (!v || *v != -n - d.coefficient(q)) return;
        }
        out.push_back(f);
    });
    return out;
}

BigInt exact_pole_count(std::uint64_t q, unsigned genus, long long m, const Divisor& g) {
    long long exponent = m + g.degree() - static_cast<long long>(genus) + 1;
    BigInt factor = 1;
    for (const auto& [p, n] : g.terms()) {
        exponent -= p.degree;
        factor *= ipow(BigInt(q), p.degree) - 1;
    }
    if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "exact pole count needs m >= 2g - 1");
    return ipow(BigInt(q), static_cast<unsigned>(exponent)) * factor;
}

LocalEvaluator::LocalEvaluator(const RRBasis& basis, std::vector<Place> places, std::vector<int> resolve)
    : model_(basis.model), places_(std::move(places)), dim_(basis.dim()) {
    if (resolve.size() != places_.size()) throw Error(ErrorCode::InvalidArgument, "one resolve bound per place");
    for (std::size_t i = 0; i < places_.size(); ++i) {
        const Place& p = places_[i];
        Site s;
        s.ext = &model_.extension(p.degree);
        const Field& k = s.ext->field();
        s.den_order = denominator_order(model_, p, basis.denominator);
        const int need = s.den_order + resolve[i];
        std::vector<Laurent> ser;
        Laurent den;
        for (int prec = 16;; prec *= 2) {
            if (prec > 4096) throw Error(ErrorCode::PrecisionExceeded, "evaluator needs excessive precision");
            ser.clear();
            bool ok = true;
            den = series::normalize(expand_numerator(model_, p, basis.denominator, Poly{}, prec));
            ok = !den.c.empty();
            for (const auto& [a, b] : basis.numerators) {
                ser.push_back(expand_numerator(model_, p, a, b, prec));
                ok = ok && ser.back().cutoff() >= need;
            }
            if (ok) break;
        }
        if (den.val != s.den_order) throw Error(ErrorCode::Internal, "denominator order mismatch");
        s.den_lead = den.c[0];
        s.emin = std::min(need, s.den_order);
        for (const auto& x : ser) s.emin = std::min(s.emin, x.val);
        s.emax = need;
        const std::size_t rowsz = dim_;
        s.coeff.assign(static_cast<std::size_t>(s.emax - s.emin) * rowsz, Field::zero());
        for (int e = s.emin; e < s.emax; ++e)
            for (std::size_t j = 0; j < dim_; ++j)
                s.coeff[static_cast<std::size_t>(e - s.emin) * rowsz + j] = series::coeff(ser[j], e);
        (void)k;
        sites_.push_back(std::move(s));
    }
}

Elem LocalEvaluator::combined(const Site& s, std::span<const Elem> lambda, int e) const {
    const Field& k = s.ext->field();
    const Elem* row = s.coeff.data() + static_cast<std::size_t>(e - s.emin) * dim_;
    Elem acc = Field::zero();
    for (std::size_t j = 0; j < dim_; ++j)
        if (lambda[j] != Field::zero() && row[j] != Field::zero()) acc = k.add(acc, k.mul(s.ext->lift(lambda[j]), row[j]));
    return acc;
}

Symbol LocalEvaluator::value(std::span<const Elem> lambda, std::size_t place) const {
    const Site& s = sites_[place];
    for (int e = s.emin; e <= s.den_order && e < s.emax; ++e) {
        const Elem c = combined(s, lambda, e);
        if (c == Field::zero()) continue;
        if (e < s.den_order) return std::nullopt;
        return s.ext->field().div(c, s.den_lead);
    }
    return Field::zero();
}

std::optional<int> LocalEvaluator::valuation_below(std::span<const Elem> lambda, std::size_t place, int bound) const {
    const Site& s = sites_[place];
    const int stop = std::min(s.emax, s.den_order + bound);
    for (int e = s.emin; e < stop; ++e)
        if (combined(s, lambda, e) != Field::zero()) return e - s.den_order;
    return std::nullopt;
}

}  // namespace sigmacode
