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

#include "sigmacode/divisor.hpp"

#include <algorithm>

namespace sigmacode {

Divisor Divisor::of(const Place& p, int coeff) {
    Divisor d;
    d.set(p, coeff);
    return d;
}

int Divisor::coefficient(const Place& p) const noexcept {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

void Divisor::set(const Place& p, int coeff) {
    if (coeff == 0)
        terms_.erase(p);
    else
        terms_[p] = coeff;
}

void Divisor::add(const Place& p, int coeff) { set(p, coefficient(p) + coeff); }

long long Divisor::degree() const noexcept {
    long long d = 0;
    for (const auto& [p, n] : terms_) d += static_cast<long long>(n) * p.degree;
    return d;
}

bool Divisor::is_effective() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::vector<Place> Divisor::support() const {
    std::vector<Place> out;
    out.reserve(terms_.size());
    for (const auto& [p, n] : terms_) out.push_back(p);
    return out;
}

namespace {

template <class Op>
Divisor pointwise(const Divisor& a, const Divisor& b, Op op) {
    Divisor out;
    for (const auto& [p, n] : a.terms()) out.set(p, op(n, b.coefficient(p)));
    for (const auto& [p, n] : b.terms())
        if (a.coefficient(p) == 0) out.set(p, op(0, n));
    return out;
}

}  // namespace

Divisor Divisor::join(const Divisor& other) const {
    return pointwise(*this, other, [](int x, int y) { return std::max(x, y); });
}

Divisor Divisor::meet(const Divisor& other) const {
    return pointwise(*this, other, [](int x, int y) { return std::min(x, y); });
}

Divisor Divisor::operator+(const Divisor& other) const {
    return pointwise(*this, other, [](int x, int y) { return x + y; });
}

Divisor Divisor::operator-(const Divisor& other) const {
    return pointwise(*this, other, [](int x, int y) { return x - y; });
}

Divisor Divisor::operator-() const { return scaled(-1); }

Divisor Divisor::scaled(int k) const {
    Divisor out;
    for (const auto& [p, n] : terms_) out.set(p, n * k);
    return out;
}

Divisor Divisor::positive_part() const {
    Divisor out;
    for (const auto& [p, n] : terms_)
        if (n > 0) out.set(p, n);
    return out;
}

Divisor Divisor::negative_part() const {
    Divisor out;
    for (const auto& [p, n] : terms_)
        if (n < 0) out.set(p, -n);
    return out;
}

}  // namespace sigmacode
