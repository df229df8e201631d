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

#include "sigmacode/curve.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "sigmacode/error.hpp"

namespace sigmacode {

struct CurveModel::Impl {
    ModelKind kind = ModelKind::Rational;
    Field base;
    Poly h;
    std::vector<BiTerm> plane;
    unsigned infinite = 0;
    unsigned genus = 0;

    std::recursive_mutex mu;
    std::map<unsigned, std::unique_ptr<Extension>> ext;
    std::map<unsigned, std::unique_ptr<Poly>> hlift;
    std::map<Place, std::shared_ptr<const LocalCoordinates>> coords;
    std::map<unsigned, std::unique_ptr<std::vector<Poly>>> irr;

    explicit Impl(Field f) : base(std::move(f)) {}
};

CurveModel CurveModel::rational(const Field& base) {
    auto impl = std::make_shared<Impl>(base);
    impl->kind = ModelKind::Rational;
    return CurveModel(std::move(impl));
}

CurveModel CurveModel::hyperelliptic(const Field& base, Poly h) {
    if (base.p() == 2) throw Error(ErrorCode::UnsupportedModel, "y^2 = h(x) requires odd characteristic");
    if (h.degree() != 3 && h.degree() != 4)
        throw Error(ErrorCode::UnsupportedModel, "deg h must be 3 or 4, got " + std::to_string(h.degree()));
    if (poly::gcd(base, h, poly::deriv(base, h)).degree() != 0)
        throw Error(ErrorCode::UnsupportedModel, "h is not squarefree");
    auto impl = std::make_shared<Impl>(base);
    impl->kind = ModelKind::Hyperelliptic;
    impl->h = std::move(h);
    impl->genus = 1;
    return CurveModel(std::move(impl));
}

CurveModel CurveModel::plane_affine(const Field& base, std::vector<BiTerm> f, unsigned infinite_places,
                                    unsigned genus) {
    if (f.empty()) throw Error(ErrorCode::UnsupportedModel, "empty plane equation");
    auto impl = std::make_shared<Impl>(base);
    impl->kind = ModelKind::PlaneAffine;
    impl->plane = std::move(f);
    impl->infinite = infinite_places;
    impl->genus = genus;
    return CurveModel(std::move(impl));
}

ModelKind CurveModel::kind() const noexcept { return impl_->kind; }
const Field& CurveModel::base() const noexcept { return impl_->base; }
unsigned CurveModel::genus() const noexcept { return impl_->genus; }
const Poly& CurveModel::h() const noexcept { return impl_->h; }
const std::vector<BiTerm>& CurveModel::affine_equation() const noexcept { return impl_->plane; }
unsigned CurveModel::declared_infinite_places() const noexcept { return impl_->infinite; }

std::string CurveModel::description() const {
    const Field& f = impl_->base;
    switch (impl_->kind) {
        case ModelKind::Rational:
            return "rational";
        case ModelKind::Hyperelliptic:
            return "y^2 = " + poly::to_string(f, impl_->h);
        case ModelKind::PlaneAffine: {
            std::string out;
            for (const auto& t : impl_->plane) {
                if (!out.empty()) out += " + ";
                std::string mono;
                if (t.i > 0) mono += t.i == 1 ? "x" : "x^" + std::to_string(t.i);
                if (t.j > 0) mono += (mono.empty() ? "" : "*") + (t.j == 1 ? std::string("y") : "y^" + std::to_string(t.j));
                if (mono.empty())
                    out += f.to_string(t.coef);
                else
                    out += (t.coef == Field::one() ? "" : f.to_string(t.coef) + "*") + mono;
            }
            return out + " = 0 (inf=" + std::to_string(impl_->infinite) + ", g=" + std::to_string(impl_->genus) + ")";
        }
    }
    return {};
}

const Extension& CurveModel::extension(unsigned r) const {
    std::lock_guard lock(impl_->mu);
    auto& slot = impl_->ext[r];
    if (!slot) slot = std::make_unique<Extension>(impl_->base, r);
    return *slot;
}

const Poly& CurveModel::h_over(unsigned r) const {
    std::lock_guard lock(impl_->mu);
    auto& slot = impl_->hlift[r];
    if (!slot) slot = std::make_unique<Poly>(poly::lift(extension(r).embedding(), impl_->h));
    return *slot;
}

const std::vector<Poly>& CurveModel::irreducibles(unsigned d) const {
    std::lock_guard lock(impl_->mu);
    auto& slot = impl_->irr[d];
    if (!slot) slot = std::make_unique<std::vector<Poly>>(poly::monic_irreducibles(impl_->base, d));
    return *slot;
}

namespace {

struct Orbit {
    Elem x;
    Elem y;
    unsigned size = 0;
};

// Frobenius orbit of (x, y) over F_q, with its smallest (x, y) member.
Orbit orbit_of(const Field& k, std::uint32_t q, Elem x, Elem y) {
    Orbit o{x, y, 0};
    Elem cx = x, cy = y;
    do {
        if (std::pair{cx, cy} < std::pair{o.x, o.y}) {
            o.x = cx;
            o.y = cy;
        }
        cx = k.pow(cx, q);
        cy = k.pow(cy, q);
        ++o.size;
    } while (cx != x || cy != y);
    return o;
}

Elem eval_plane(const Field& k, const Extension& e, const std::vector<BiTerm>& terms, Elem x, Elem y) {
    Elem acc = Field::zero();
    for (const auto& t : terms) acc = k.add(acc, k.mul(e.lift(t.coef), k.mul(k.pow(x, t.i), k.pow(y, t.j))));
    return acc;
}

void require_curve_ops(const CurveModel& m) {
    if (m.kind() == ModelKind::PlaneAffine)
        throw Error(ErrorCode::UnsupportedModel, "plane models support point counting only");
}

// Square root of a power series H with H(0) = y0^2, to N terms.
std::vector<Elem> sqrt_series(const Field& k, const Laurent& H, Elem y0, int n) {
    std::vector<Elem> Y(static_cast<std::size_t>(n), Field::zero());
    Y[0] = y0;
    const Elem inv2y0 = k.inv(k.add(y0, y0));
    for (int i = 1; i < n; ++i) {
        Elem s = series::coeff(H, i);
        for (int j = 1; j < i; ++j) s = k.sub(s, k.mul(Y[static_cast<std::size_t>(j)], Y[static_cast<std::size_t>(i - j)]));
        Y[static_cast<std::size_t>(i)] = k.mul(s, inv2y0);
    }
    return Y;
}

Laurent shift(Laurent a, int k) {
    a.val += k;
    return a;
}

std::shared_ptr<LocalCoordinates> compute_coordinates(const CurveModel& m, const Place& p, int n) {
    const Field& k = m.extension(p.degree).field();
    auto lc = std::make_shared<LocalCoordinates>();
    lc->prec = n;
    lc->y = series::constant(Field::zero(), n);
    if (m.kind() == ModelKind::Rational) {
        if (p.kind == PlaceKind::Infinite) {
            lc->x = series::monomial(Field::one(), -1, n);
        } else {
            lc->x = series::constant(p.x, n);
            if (n > 1) lc->x.c[1] = Field::one();
        }
        return lc;
    }
    const Poly& h = m.h_over(p.degree);
    if (p.kind == PlaceKind::Finite) {
        Laurent x = series::constant(p.x, std::max(n, 2));
        x.c[1] = Field::one();
        x = series::truncate(x, n);
        if (p.y != Field::zero()) {
            // t = x - x0, y = sqrt(h(x0 + t)).
            const Laurent H = series::eval_poly(k, h, x);
            lc->x = x;
            lc->y = Laurent{0, sqrt_series(k, H, p.y, n)};
            return lc;
        }
        // Ramified: t = y, x = x0 + u with h(x0 + u) = t^2.
        Laurent shift_x = series::constant(p.x, 6);
        shift_x.c[1] = Field::one();
        const Laurent hs = series::eval_poly(k, h, shift_x);
        const Elem g1 = series::coeff(hs, 1);
        const Elem inv_g1 = k.inv(g1);
        Laurent u = series::constant(Field::zero(), n);
        const Laurent t2 = series::monomial(Field::one(), 2, n);
        for (int iter = 0; iter < n + 4; ++iter) {
            // rhs = t^2 - sum_{i>=2} hs_i u^i
            Laurent acc = series::constant(Field::zero(), n);
            Laurent upow = series::mul(k, u, u);
            for (int i = 2; i <= h.degree(); ++i) {
                acc = series::add(k, acc, series::scale(k, upow, series::coeff(hs, i)));
                upow = series::mul(k, upow, u);
            }
            Laurent next = series::truncate(series::scale(k, series::sub(k, t2, acc), inv_g1), n);
            next = series::add(k, next, series::constant(Field::zero(), n));
            if (series::normalize(next).c == series::normalize(u).c && series::order(next) == series::order(u)) break;
            u = next;
        }
        lc->x = series::add_constant(k, series::add(k, u, series::constant(Field::zero(), n)), p.x);
        lc->y = series::monomial(Field::one(), 1, n);
        return lc;
    }
    if (h.degree() == 4) {
        // t = 1/x, y = t^-2 W, W^2 = t^4 h(1/t).
        std::vector<Elem> rev(h.c.rbegin(), h.c.rend());
        Laurent R{0, rev};
        R.c.resize(static_cast<std::size_t>(std::max(n, 5)), Field::zero());
        lc->x = series::monomial(Field::one(), -1, n);
        lc->y = Laurent{-2, sqrt_series(k, R, p.y, n)};
        return lc;
    }
    // Cubic: t = x/y, x = t^-2 U, y = t^-3 U,
    // U^2 = lc U^3 + c2 t^2 U^2 + c1 t^4 U + c0 t^6.
    const Elem lead = h.lead();
    Laurent U = series::constant(k.inv(lead), n);
    for (int iter = 0; iter < n + 8; ++iter) {
        const Laurent U2 = series::mul(k, U, U);
        const Laurent U3 = series::mul(k, U2, U);
        Laurent F = series::sub(k, series::scale(k, U3, lead), U2);
        F = series::add(k, F, shift(series::scale(k, U2, h.coeff(2)), 2));
        F = series::add(k, F, shift(series::scale(k, U, h.coeff(1)), 4));
        F = series::add_constant(k, F, Field::zero());
        F = series::add(k, F, series::monomial(h.coeff(0), 6, n));
        Laurent next = series::sub(k, U, series::scale(k, F, lead));
        next = series::truncate(next, n);
        bool same = next.cutoff() == U.cutoff();
        for (int e = 0; same && e < n; ++e) same = series::coeff(next, e) == series::coeff(U, e);
        U = Laurent{0, std::vector<Elem>(static_cast<std::size_t>(n))};
        for (int e = 0; e < n; ++e) U.c[static_cast<std::size_t>(e)] = series::coeff(next, e);
        if (same) break;
    }
    lc->x = shift(U, -2);
    lc->y = shift(U, -3);
    return lc;
}

Elem eval_lifted(const Field& k, const Extension& e, const Poly& a, Elem x) {
    Elem acc = Field::zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = k.add(k.mul(acc, x), e.lift(a.c[i]));
    return acc;
}

constexpr int kMaxAdaptivePrecision = 1024;

}  // namespace

std::shared_ptr<const LocalCoordinates> CurveModel::local_coordinates(const Place& p, int prec) const {
    require_curve_ops(*this);
    if (prec < 1) throw Error(ErrorCode::PrecisionExceeded, "precision must be positive");
    std::lock_guard lock(impl_->mu);
    auto& slot = impl_->coords[p];
    if (!slot || slot->prec < prec) slot = compute_coordinates(*this, p, prec);
    if (slot->prec == prec) return slot;
    auto cut = std::make_shared<LocalCoordinates>();
    cut->prec = prec;
    cut->x = slot->x;
    cut->x.c.resize(static_cast<std::size_t>(prec));
    cut->y = slot->y;
    cut->y.c.resize(static_cast<std::size_t>(prec));
    return cut;
}

std::string to_string(const CurveModel& m, const Place& p) {
    const Field& k = m.extension(p.degree).field();
    std::string out = "deg " + std::to_string(p.degree);
    if (p.kind == PlaceKind::Infinite) {
        out += ", infinite";
        if (m.kind() == ModelKind::PlaneAffine) return out + " #" + std::to_string(p.x.v);
        if (m.kind() == ModelKind::Hyperelliptic && m.h().degree() == 4) out += ", y/x^2 -> " + k.to_string(p.y);
        return out;
    }
    out += ", over " + poly::to_string(m.base(), x_polynomial(m, p));
    out += ", x = " + k.to_string(p.x);
    if (m.kind() != ModelKind::Rational) out += ", y = " + k.to_string(p.y);
    return out;
}

std::vector<Place> infinite_places(const CurveModel& m) {
    std::vector<Place> out;
    switch (m.kind()) {
        case ModelKind::Rational:
            out.push_back({1, PlaceKind::Infinite, {}, {}});
            break;
        case ModelKind::PlaneAffine:
            for (unsigned i = 0; i < m.declared_infinite_places(); ++i) out.push_back({1, PlaceKind::Infinite, Elem{i}, {}});
            break;
        case ModelKind::Hyperelliptic: {
            if (m.h().degree() == 3) {
                out.push_back({1, PlaceKind::Infinite, {}, {}});
                break;
            }
            const Field& f = m.base();
            const Elem lead = m.h().lead();
            if (auto w = f.sqrt(lead)) {
                out.push_back({1, PlaceKind::Infinite, {}, *w});
                out.push_back({1, PlaceKind::Infinite, {}, f.neg(*w)});
            } else {
                const Extension& e2 = m.extension(2);
                const Field& k = e2.field();
                const Elem w2 = *k.sqrt(e2.lift(lead));
                out.push_back({2, PlaceKind::Infinite, {}, std::min(w2, k.neg(w2))});
            }
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Place> places_of_degree(const CurveModel& m, unsigned r) {
    if (r < 1 || r > 3) throw Error(ErrorCode::UnsupportedDegree, "place degree must be 1..3");
    const Extension& e = m.extension(r);
    const Field& k = e.field();
    const std::uint32_t q = m.base().q();
    std::set<Place> out;
    auto consider = [&](Elem x, Elem y) {
        const Orbit o = orbit_of(k, q, x, y);
        if (o.size == r) out.insert({r, PlaceKind::Finite, o.x, o.y});
    };
    switch (m.kind()) {
        case ModelKind::Rational:
            for (std::uint32_t x = 0; x < k.q(); ++x) consider(Elem{x}, Field::zero());
            break;
        case ModelKind::Hyperelliptic: {
            const Poly& h = m.h_over(r);
            for (std::uint32_t xi = 0; xi < k.q(); ++xi) {
                const Elem x{xi};
                const Elem hx = poly::eval(k, h, x);
                if (hx == Field::zero()) {
                    consider(x, hx);
                } else if (auto y = k.sqrt(hx)) {
                    consider(x, *y);
                    consider(x, k.neg(*y));
                }
            }
            break;
        }
        case ModelKind::PlaneAffine:
            for (std::uint32_t xi = 0; xi < k.q(); ++xi)
                for (std::uint32_t yi = 0; yi < k.q(); ++yi)
                    if (eval_plane(k, e, m.affine_equation(), Elem{xi}, Elem{yi}) == Field::zero())
                        consider(Elem{xi}, Elem{yi});
            break;
    }
    for (const Place& p : infinite_places(m))
        if (p.degree == r) out.insert(p);
    return {out.begin(), out.end()};
}

std::vector<Place> rational_places(const CurveModel& m) { return places_of_degree(m, 1); }

std::uint64_t point_count(const CurveModel& m, unsigned r) {
    if (r < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    const Extension& e = m.extension(r);
    const Field& k = e.field();
    std::uint64_t count = 0;
    switch (m.kind()) {
        case ModelKind::Rational:
            return std::uint64_t(k.q()) + 1;
        case ModelKind::Hyperelliptic: {
            const Poly& h = m.h_over(r);
            for (std::uint32_t xi = 0; xi < k.q(); ++xi) {
                const Elem hx = poly::eval(k, h, Elem{xi});
                if (hx == Field::zero())
                    count += 1;
                else if (k.is_square(hx))
                    count += 2;
            }
            if (h.degree() == 3)
                count += 1;
            else if (k.is_square(h.lead()))
                count += 2;
            return count;
        }
        case ModelKind::PlaneAffine:
            for (std::uint32_t xi = 0; xi < k.q(); ++xi)
                for (std::uint32_t yi = 0; yi < k.q(); ++yi)
                    if (eval_plane(k, e, m.affine_equation(), Elem{xi}, Elem{yi}) == Field::zero()) ++count;
            return count + m.declared_infinite_places();
    }
    return count;
}

std::vector<Place> places_over(const CurveModel& m, const Poly& pi) {
    require_curve_ops(m);
    const int d = pi.degree();
    if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedFactor, "x-factor of degree " + std::to_string(d));
    const unsigned ud = static_cast<unsigned>(d);
    const Extension& e = m.extension(ud);
    const Field& k = e.field();
    const Poly piK = poly::lift(e.embedding(), pi);
    std::optional<Elem> root;
    for (std::uint32_t xi = 0; xi < k.q() && !root; ++xi)
        if (poly::eval(k, piK, Elem{xi}) == Field::zero()) root = Elem{xi};
    if (!root) throw Error(ErrorCode::InvalidArgument, "polynomial is not irreducible of the stated degree");
    const Elem x0 = *root;
    if (m.kind() == ModelKind::Rational) return {{ud, PlaceKind::Finite, x0, {}}};

    const std::uint32_t q = m.base().q();
    const Elem hx = poly::eval(k, m.h_over(ud), x0);
    if (hx == Field::zero()) return {{ud, PlaceKind::Finite, x0, {}}};
    if (auto y = k.sqrt(hx)) {
        const Orbit a = orbit_of(k, q, x0, *y);
        const Orbit b = orbit_of(k, q, x0, k.neg(*y));
        std::vector<Place> out{{ud, PlaceKind::Finite, a.x, a.y}, {ud, PlaceKind::Finite, b.x, b.y}};
        std::sort(out.begin(), out.end());
        return out;
    }
    if (2 * ud > 3) throw Error(ErrorCode::UnsupportedFactor, "inert place of degree " + std::to_string(2 * d));
    const Extension& e2 = m.extension(2);
    const Field& k2 = e2.field();
    const Elem x2 = e2.lift(x0);
    const Elem y2 = *k2.sqrt(poly::eval(k2, m.h_over(2), x2));
    const Orbit o = orbit_of(k2, q, x2, y2);
    return {{2, PlaceKind::Finite, o.x, o.y}};
}

unsigned ramification(const CurveModel& m, const Place& p) {
    if (m.kind() != ModelKind::Hyperelliptic) return 1;
    if (p.kind == PlaceKind::Infinite) return m.h().degree() == 3 ? 2 : 1;
    return p.y == Field::zero() ? 2 : 1;
}

Poly x_polynomial(const CurveModel& m, const Place& p) {
    if (p.kind != PlaceKind::Finite) throw Error(ErrorCode::InvalidArgument, "x_polynomial of an infinite place");
    const Extension& e = m.extension(p.degree);
    const Field& k = e.field();
    Poly acc = Poly::constant(Field::one());
    Elem cur = p.x;
    do {
        acc = poly::mul(k, acc, Poly({k.neg(cur), Field::one()}));
        cur = k.pow(cur, m.base().q());
    } while (cur != p.x);
    std::vector<Elem> c(acc.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto low = e.lower(acc.c[i]);
        if (!low) throw Error(ErrorCode::Internal, "minimal polynomial not defined over the base field");
        c[i] = *low;
    }
    return Poly(std::move(c));
}

Laurent expand_numerator(const CurveModel& m, const Place& p, const Poly& a, const Poly& b, int prec) {
    const auto lc = m.local_coordinates(p, prec);
    const Extension& e = m.extension(p.degree);
    const Field& k = e.field();
    Laurent out = series::eval_poly(k, poly::lift(e.embedding(), a), lc->x);
    if (!b.is_zero()) {
        const Laurent bs = series::eval_poly(k, poly::lift(e.embedding(), b), lc->x);
        out = series::add(k, out, series::mul(k, bs, lc->y));
    }
    return out;
}

std::optional<int> valuation(const CurveModel& m, const Place& p, const FunctionElt& f) {
    require_curve_ops(m);
    if (f.is_zero()) return std::nullopt;
    const Extension& e = m.extension(p.degree);
    const Field& k = e.field();
    if (p.kind == PlaceKind::Finite && eval_lifted(k, e, f.c, p.x) != Field::zero()) {
        const Elem nv = k.add(eval_lifted(k, e, f.a, p.x), k.mul(eval_lifted(k, e, f.b, p.x), p.y));
        if (nv != Field::zero()) return 0;
    }
    const int base_prec = 2 * (f.a.degree() + f.b.degree() + f.c.degree()) + 8;
    for (int n = std::clamp(base_prec, 8, 64); n <= kMaxAdaptivePrecision; n *= 2) {
        const auto on = series::order(expand_numerator(m, p, f.a, f.b, n));
        const auto od = series::order(expand_numerator(m, p, f.c, Poly{}, n));
        if (on && od) return *on - *od;
    }
    throw Error(ErrorCode::PrecisionExceeded, "valuation not determined within precision cap");
}

Symbol evaluate(const CurveModel& m, const FunctionElt& f, const Place& p) {
    require_curve_ops(m);
    if (p.degree != 1) throw Error(ErrorCode::InvalidArgument, "evaluation needs a rational place");
    if (f.is_zero()) return Field::zero();
    const Extension& e = m.extension(1);
    const Field& k = e.field();
    if (p.kind == PlaceKind::Finite) {
        const Elem cv = eval_lifted(k, e, f.c, p.x);
        if (cv != Field::zero())
            return k.div(k.add(eval_lifted(k, e, f.a, p.x), k.mul(eval_lifted(k, e, f.b, p.x), p.y)), cv);
    }
    for (int n = 16; n <= kMaxAdaptivePrecision; n *= 2) {
        const Laurent num = expand_numerator(m, p, f.a, f.b, n);
        const Laurent den = expand_numerator(m, p, f.c, Poly{}, n);
        const auto od = series::order(den);
        if (!od) continue;
        const auto on = series::order(num);
        if (!on) {
            if (num.cutoff() > *od) return Field::zero();
            continue;
        }
        if (*on < *od) return std::nullopt;
        if (*on > *od) return Field::zero();
        return k.div(series::coeff(num, *on), series::coeff(den, *od));
    }
    throw Error(ErrorCode::PrecisionExceeded, "value not determined within precision cap");
}

Laurent local_expand(const CurveModel& m, const Place& p, const FunctionElt& f, int prec) {
    require_curve_ops(m);
    if (prec < 1 || prec > 64) throw Error(ErrorCode::PrecisionExceeded, "local_expand precision must be 1..64");
    if (f.is_zero()) return Laurent{prec, {}};
    const Field& k = m.extension(p.degree).field();
    for (int n = prec + 8; n <= kMaxAdaptivePrecision; n *= 2) {
        const Laurent num = expand_numerator(m, p, f.a, f.b, n);
        const Laurent den = expand_numerator(m, p, f.c, Poly{}, n);
        if (!series::order(den)) continue;
        const Laurent r = series::mul(k, num, series::inv(k, den));
        if (r.cutoff() >= prec) return series::normalize(series::truncate(r, prec));
    }
    throw Error(ErrorCode::PrecisionExceeded, "expansion not determined within precision cap");
}

std::vector<std::pair<Poly, unsigned>> factor_small(const CurveModel& m, const Poly& a) {
    const Field& f = m.base();
    if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "factorization of zero");
    std::vector<std::pair<Poly, unsigned>> out;
    Poly cur = poly::monic(f, a);
    for (unsigned d = 1; d <= 3 && cur.degree() >= static_cast<int>(d); ++d) {
        for (const Poly& pi : m.irreducibles(d)) {
            if (cur.degree() < static_cast<int>(d)) break;
            unsigned mult = 0;
            for (;;) {
                auto [q, r] = poly::divmod(f, cur, pi);
                if (!r.is_zero()) break;
                cur = std::move(q);
                ++mult;
            }
            if (mult > 0) out.emplace_back(pi, mult);
        }
    }
    if (cur.degree() > 0)
        throw Error(ErrorCode::UnsupportedFactor, "irreducible factor of degree > 3: " + poly::to_string(f, cur));
    return out;
}

Divisor principal_divisor(const CurveModel& m, const FunctionElt& f) {
    require_curve_ops(m);
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "principal divisor of zero");
    const Field& F = m.base();
    std::set<Poly> candidates;
    for (const auto& [pi, e] : factor_small(m, f.c)) candidates.insert(pi);
    const Poly norm = poly::sub(F, poly::mul(F, f.a, f.a), poly::mul(F, poly::mul(F, f.b, f.b), m.h()));
    for (const auto& [pi, e] : factor_small(m, norm)) candidates.insert(pi);
    Divisor out;
    for (const Poly& pi : candidates)
        for (const Place& p : places_over(m, pi)) out.set(p, *valuation(m, p, f));
    for (const Place& p : infinite_places(m)) out.set(p, *valuation(m, p, f));
    return out;
}

}  // namespace sigmacode
