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

#include "sigmacode/function.hpp"

#include "sigmacode/curve.hpp"
#include "sigmacode/error.hpp"

namespace sigmacode {

std::size_t FunctionKeyHash::operator()(const FunctionKey& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ k.words.size();
    for (std::uint32_t w : k.words) {
        h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xbf58476d1ce4e5b9ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
}

namespace function {

FunctionElt canonicalize(const Field& f, FunctionElt e) {
    if (e.c.is_zero()) throw Error(ErrorCode::DivisionByZero, "function with zero denominator");
    if (e.is_zero()) return FunctionElt{};
    const Poly g = poly::gcd(f, poly::gcd(f, e.a, e.b), e.c);
    if (g.degree() > 0) {
        e.a = poly::exact_div(f, e.a, g);
        e.b = poly::exact_div(f, e.b, g);
        e.c = poly::exact_div(f, e.c, g);
    }
    if (e.c.lead() != Field::one()) {
        const Elem s = f.inv(e.c.lead());
        e.a = poly::scale(f, e.a, s);
        e.b = poly::scale(f, e.b, s);
        e.c = poly::scale(f, e.c, s);
    }
    return e;
}

FunctionElt constant(Elem e) {
    FunctionElt out;
    out.a = Poly::constant(e);
    return out;
}

FunctionElt from_poly(const Field& f, const Poly& a) {
    FunctionElt out;
    out.a = a;
    return canonicalize(f, out);
}

FunctionElt y() {
    FunctionElt out;
    out.b = Poly::constant(Field::one());
    return out;
}

FunctionElt add(const CurveModel& m, const FunctionElt& u, const FunctionElt& v) {
    const Field& f = m.base();
    FunctionElt out;
    if (u.c == v.c) {
        out.a = poly::add(f, u.a, v.a);
        out.b = poly::add(f, u.b, v.b);
        out.c = u.c;
    } else {
        out.a = poly::add(f, poly::mul(f, u.a, v.c), poly::mul(f, v.a, u.c));
        out.b = poly::add(f, poly::mul(f, u.b, v.c), poly::mul(f, v.b, u.c));
        out.c = poly::mul(f, u.c, v.c);
    }
    return canonicalize(f, std::move(out));
}

FunctionElt neg(const CurveModel& m, const FunctionElt& u) {
    FunctionElt out = u;
    out.a = poly::neg(m.base(), u.a);
    out.b = poly::neg(m.base(), u.b);
    return out;
}

FunctionElt sub(const CurveModel& m, const FunctionElt& u, const FunctionElt& v) { return add(m, u, neg(m, v)); }

FunctionElt mul(const CurveModel& m, const FunctionElt& u, const FunctionElt& v) {
    const Field& f = m.base();
    FunctionElt out;
    out.a = poly::add(f, poly::mul(f, u.a, v.a), poly::mul(f, poly::mul(f, u.b, v.b), m.h()));
    out.b = poly::add(f, poly::mul(f, u.a, v.b), poly::mul(f, u.b, v.a));
    out.c = poly::mul(f, u.c, v.c);
    return canonicalize(f, std::move(out));
}

FunctionElt inv(const CurveModel& m, const FunctionElt& u) {
    if (u.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero function");
    const Field& f = m.base();
    const Poly norm = poly::sub(f, poly::mul(f, u.a, u.a), poly::mul(f, poly::mul(f, u.b, u.b), m.h()));
    FunctionElt out;
    out.a = poly::mul(f, u.c, u.a);
    out.b = poly::neg(f, poly::mul(f, u.c, u.b));
    out.c = norm;
    return canonicalize(f, std::move(out));
}

FunctionElt div(const CurveModel& m, const FunctionElt& u, const FunctionElt& v) { return mul(m, u, inv(m, v)); }

FunctionKey key(const FunctionElt& u) {
    FunctionKey k;
    k.words.reserve(u.a.c.size() + u.b.c.size() + u.c.c.size() + 3);
    for (const Poly* p : {&u.a, &u.b, &u.c}) {
        k.words.push_back(static_cast<std::uint32_t>(p->c.size()));
        for (Elem e : p->c) k.words.push_back(e.v);
    }
    return k;
}

std::string to_string(const Field& f, const FunctionElt& u) {
    if (u.is_zero()) return "0";
    std::string num;
    if (!u.a.is_zero()) num = poly::to_string(f, u.a);
    if (!u.b.is_zero()) {
        if (!num.empty()) num += " + ";
        num += u.b.degree() == 0 && u.b.lead() == Field::one() ? "y" : "(" + poly::to_string(f, u.b) + ")*y";
    }
    if (u.c.degree() == 0) return num;
    return "(" + num + ")/(" + poly::to_string(f, u.c) + ")";
}

}  // namespace function
}  // namespace sigmacode
