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

#include "sigmacode/poly.hpp"

#include <algorithm>

#include "sigmacode/error.hpp"

namespace sigmacode {

Poly Poly::monomial(Elem coeff, std::size_t degree) {
    std::vector<Elem> c(degree + 1, Field::zero());
    c[degree] = coeff;
    return Poly(std::move(c));
}

namespace poly {

Poly add(const Field& f, const Poly& a, const Poly& b) {
    std::vector<Elem> c(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(c));
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
    std::vector<Elem> c(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(c));
}

Poly neg(const Field& f, const Poly& a) {
    Poly out = a;
    for (auto& e : out.c) e = f.neg(e);
    return out;
}

Poly scale(const Field& f, const Poly& a, Elem s) {
    std::vector<Elem> c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.mul(a.c[i], s);
    return Poly(std::move(c));
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Elem> c(a.c.size() + b.c.size() - 1, Field::zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == Field::zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.c[i], b.c[j]));
    }
    return Poly(std::move(c));
}

Poly pow(const Field& f, const Poly& a, unsigned e) {
    Poly result = Poly::constant(Field::one());
    Poly base = a;
    while (e > 0) {
        if (e & 1u) result = mul(f, result, base);
        e >>= 1;
        if (e > 0) base = mul(f, base, base);
    }
    return result;
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Elem> r = a.c;
    std::vector<Elem> q(a.c.size() - b.c.size() + 1, Field::zero());
    const Elem inv_lead = f.inv(b.lead());
    const std::size_t db = b.c.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
        const Elem coef = f.mul(r[k + db], inv_lead);
        q[k] = coef;
        if (coef == Field::zero()) continue;
        for (std::size_t i = 0; i <= db; ++i) r[k + i] = f.sub(r[k + i], f.mul(coef, b.c[i]));
    }
    r.resize(db);
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly rem(const Field& f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

Poly exact_div(const Field& f, const Poly& a, const Poly& b) {
    auto [q, r] = divmod(f, a, b);
    if (!r.is_zero()) throw Error(ErrorCode::Internal, "inexact polynomial division");
    return q;
}

Poly monic(const Field& f, const Poly& a) {
    if (a.is_zero() || a.lead() == Field::one()) return a;
    return scale(f, a, f.inv(a.lead()));
}

Poly gcd(const Field& f, const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = rem(f, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(f, x);
}

Poly deriv(const Field& f, const Poly& a) {
    if (a.c.size() <= 1) return {};
    std::vector<Elem> c(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) c[i - 1] = f.mul(f.from_int(static_cast<long long>(i)), a.c[i]);
    return Poly(std::move(c));
}

Elem eval(const Field& f, const Poly& a, Elem x) {
    Elem acc = Field::zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.c[i]);
    return acc;
}

Poly lift(const Embedding& e, const Poly& a) {
    std::vector<Elem> c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = e(a.c[i]);
    return Poly(std::move(c));
}

std::vector<Poly> monic_irreducibles(const Field& f, unsigned d) {
    if (d == 0 || d > 3) throw Error(ErrorCode::UnsupportedDegree, "irreducible enumeration supports degree 1..3");
    std::vector<Poly> out;
    const std::uint32_t q = f.q();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<Elem> c(d + 1);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < d; ++i) {
            c[i] = Elem{static_cast<std::uint32_t>(t % q)};
            t /= q;
        }
        c[d] = Field::one();
        Poly p(std::move(c));
        // Degree <= 3: irreducible iff rootless.
        bool has_root = false;
        if (d > 1)
            for (std::uint32_t x = 0; x < q && !has_root; ++x) has_root = eval(f, p, Elem{x}) == Field::zero();
        if (!has_root) out.push_back(std::move(p));
    }
    return out;
}

unsigned multiplicity(const Field& f, const Poly& a, const Poly& p) {
    unsigned m = 0;
    Poly cur = a;
    while (!cur.is_zero()) {
        auto [q, r] = divmod(f, cur, p);
        if (!r.is_zero()) break;
        cur = std::move(q);
        ++m;
    }
    return m;
}

std::string to_string(const Field& f, const Poly& a, char var) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        const Elem e = a.c[i];
        if (e == Field::zero()) continue;
        std::string coef = f.to_string(e);
        if (f.k() > 1 && coef.find('+') != std::string::npos) coef = "(" + coef + ")";
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += coef;
            continue;
        }
        if (e != Field::one()) out += coef + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace poly
}  // namespace sigmacode
