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

#include "sigmacode/series.hpp"

#include <algorithm>

#include "sigmacode/error.hpp"

namespace sigmacode::series {

Laurent constant(Elem e, int prec) {
    Laurent out;
    out.c.assign(static_cast<std::size_t>(std::max(prec, 1)), Field::zero());
    out.c[0] = e;
    return out;
}

Laurent monomial(Elem e, int exp, int prec) {
    Laurent out = constant(e, prec);
    out.val = exp;
    return out;
}

Laurent normalize(Laurent a) {
    std::size_t lead = 0;
    while (lead < a.c.size() && a.c[lead] == Field::zero()) ++lead;
    if (lead > 0) {
        a.c.erase(a.c.begin(), a.c.begin() + static_cast<std::ptrdiff_t>(lead));
        a.val += static_cast<int>(lead);
    }
    return a;
}

std::optional<int> order(const Laurent& a) {
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != Field::zero()) return a.val + static_cast<int>(i);
    return std::nullopt;
}

Elem coeff(const Laurent& a, int e) {
    if (e >= a.cutoff()) throw Error(ErrorCode::PrecisionExceeded, "coefficient beyond series precision");
    if (e < a.val) return Field::zero();
    return a.c[static_cast<std::size_t>(e - a.val)];
}

namespace {

Laurent combine(const Field& k, const Laurent& a, const Laurent& b, bool subtract) {
    Laurent out;
    out.val = std::min(a.val, b.val);
    const int cut = std::min(a.cutoff(), b.cutoff());
    if (cut <= out.val) {
        out.val = cut;
        return out;
    }
    out.c.assign(static_cast<std::size_t>(cut - out.val), Field::zero());
    for (int e = out.val; e < cut; ++e) {
        const Elem x = e >= a.val ? a.c[static_cast<std::size_t>(e - a.val)] : Field::zero();
        const Elem y = e >= b.val ? b.c[static_cast<std::size_t>(e - b.val)] : Field::zero();
        out.c[static_cast<std::size_t>(e - out.val)] = subtract ? k.sub(x, y) : k.add(x, y);
    }
    return out;
}

}  // namespace

Laurent add(const Field& k, const Laurent& a, const Laurent& b) { return combine(k, a, b, false); }
Laurent sub(const Field& k, const Laurent& a, const Laurent& b) { return combine(k, a, b, true); }

Laurent neg(const Field& k, const Laurent& a) {
    Laurent out = a;
    for (auto& e : out.c) e = k.neg(e);
    return out;
}

Laurent scale(const Field& k, const Laurent& a, Elem s) {
    Laurent out = a;
    for (auto& e : out.c) e = k.mul(e, s);
    return out;
}

Laurent add_constant(const Field& k, const Laurent& a, Elem e) {
    if (e == Field::zero() || a.cutoff() <= 0) return a;
    Laurent out = a;
    if (out.val > 0) {
        out.c.insert(out.c.begin(), static_cast<std::size_t>(out.val), Field::zero());
        out.val = 0;
    }
    auto& slot = out.c[static_cast<std::size_t>(-out.val)];
    slot = k.add(slot, e);
    return out;
}

Laurent mul(const Field& k, const Laurent& a0, const Laurent& b0) {
    const Laurent a = normalize(a0);
    const Laurent b = normalize(b0);
    Laurent out;
    out.val = a.val + b.val;
    const int cut = std::min(a.cutoff() + b.val, b.cutoff() + a.val);
    const int n = std::max(cut - out.val, 0);
    out.c.assign(static_cast<std::size_t>(n), Field::zero());
    for (int i = 0; i < n && i < static_cast<int>(a.c.size()); ++i) {
        const Elem ai = a.c[static_cast<std::size_t>(i)];
        if (ai == Field::zero()) continue;
        const int jmax = std::min(n - i, static_cast<int>(b.c.size()));
        for (int j = 0; j < jmax; ++j) {
            auto& slot = out.c[static_cast<std::size_t>(i + j)];
            slot = k.add(slot, k.mul(ai, b.c[static_cast<std::size_t>(j)]));
        }
    }
    return out;
}

Laurent inv(const Field& k, const Laurent& a0) {
    const Laurent a = normalize(a0);
    if (a.c.empty()) throw Error(ErrorCode::PrecisionExceeded, "cannot invert a series with no known nonzero term");
    const std::size_t n = a.c.size();
    const Elem inv0 = k.inv(a.c[0]);
    Laurent out;
    out.val = -a.val;
    out.c.assign(n, Field::zero());
    out.c[0] = inv0;
    for (std::size_t m = 1; m < n; ++m) {
        Elem acc = Field::zero();
        for (std::size_t i = 1; i <= m; ++i) acc = k.add(acc, k.mul(a.c[i], out.c[m - i]));
        out.c[m] = k.neg(k.mul(acc, inv0));
    }
    return out;
}

Laurent truncate(Laurent a, int cut) {
    if (cut < a.cutoff()) {
        if (cut <= a.val) {
            a.c.clear();
            a.val = cut;
        } else {
            a.c.resize(static_cast<std::size_t>(cut - a.val));
        }
    }
    return a;
}

Laurent eval_poly(const Field& k, const Poly& p, const Laurent& x) {
    const int prec = std::max(static_cast<int>(x.c.size()), 1);
    if (p.degree() <= 0) return constant(p.coeff(0), prec);
    Laurent acc = scale(k, x, p.lead());
    acc = add_constant(k, acc, p.c[p.c.size() - 2]);
    for (std::size_t i = p.c.size() - 2; i-- > 0;) {
        acc = mul(k, acc, x);
        acc = add_constant(k, acc, p.c[i]);
    }
    return acc;
}

}  // namespace sigmacode::series
