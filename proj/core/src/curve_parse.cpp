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

#include "sigmacode/curve_parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <string>

#include "sigmacode/error.hpp"

namespace sigmacode {

namespace {

using Mono = std::pair<unsigned, unsigned>;  // (deg x, deg y)

class BiPoly {
   public:
    explicit BiPoly(std::uint64_t p) : p_(p) {}

    static BiPoly constant(std::uint64_t p, std::uint64_t v) {
        BiPoly out(p);
        out.set({0, 0}, v % p);
        return out;
    }
    static BiPoly var(std::uint64_t p, Mono m) {
        BiPoly out(p);
        out.set(m, 1 % p);
        return out;
    }

    BiPoly operator+(const BiPoly& o) const {
        BiPoly out = *this;
        for (const auto& [m, c] : o.t_) out.set(m, out.get(m) + c);
        return out;
    }
    BiPoly negated() const {
        BiPoly out(p_);
        for (const auto& [m, c] : t_) out.set(m, p_ - c);
        return out;
    }
    BiPoly operator*(const BiPoly& o) const {
        BiPoly out(p_);
        for (const auto& [m1, c1] : t_)
            for (const auto& [m2, c2] : o.t_) {
                const Mono m{m1.first + m2.first, m1.second + m2.second};
                out.set(m, out.get(m) + c1 * c2 % p_);
            }
        return out;
    }

    const std::map<Mono, std::uint64_t>& terms() const { return t_; }

   private:
    std::uint64_t get(Mono m) const {
        auto it = t_.find(m);
        return it == t_.end() ? 0 : it->second;
    }
    void set(Mono m, std::uint64_t c) {
        c %= p_;
        if (c == 0)
            t_.erase(m);
        else
            t_[m] = c;
    }

    std::uint64_t p_;
    std::map<Mono, std::uint64_t> t_;
};

constexpr unsigned kMaxExponent = 64;

class Parser {
   public:
    Parser(std::string_view s, std::uint64_t p) : s_(s), p_(p) {}

    BiPoly parse_all() {
        BiPoly lhs = expr();
        skip();
        if (pos_ < s_.size() && s_[pos_] == '=') {
            ++pos_;
            BiPoly rhs = expr();
            lhs = lhs + rhs.negated();
        }
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return lhs;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    std::uint64_t integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        std::uint64_t v = 0;
        for (std::size_t i = start; i < pos_; ++i) v = (v * 10 + static_cast<std::uint64_t>(s_[i] - '0')) % p_;
        return v;
    }

    unsigned exponent() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (start == pos_ || ec != std::errc{} || v > kMaxExponent) fail("bad exponent");
        (void)ptr;
        return v;
    }

    BiPoly expr() {
        BiPoly acc = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc + term().negated();
            } else {
                return acc;
            }
        }
    }

    BiPoly term() {
        BiPoly acc = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == 'x' || c == 'y' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    BiPoly unary() {
        const char c = peek();
        if (c == '-') {
            ++pos_;
            return unary().negated();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    BiPoly power() {
        BiPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            const unsigned e = exponent();
            BiPoly out = BiPoly::constant(p_, 1);
            for (unsigned i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    BiPoly atom() {
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            return BiPoly::var(p_, {1, 0});
        }
        if (c == 'y') {
            ++pos_;
            return BiPoly::var(p_, {0, 1});
        }
        if (c == '(') {
            ++pos_;
            BiPoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return BiPoly::constant(p_, integer());
        fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::uint64_t p_;
    std::size_t pos_ = 0;
};

unsigned parse_count(std::string_view field, std::string_view key) {
    if (field.substr(0, key.size()) != key) throw Error(ErrorCode::ParseError, "expected '" + std::string(key) + "'");
    field.remove_prefix(key.size());
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw Error(ErrorCode::ParseError, "bad integer in '" + std::string(key) + std::string(field) + "'");
    return v;
}

}  // namespace

std::vector<BiTerm> parse_bivariate(std::string_view text, std::uint32_t p) {
    const BiPoly poly = Parser(text, p).parse_all();
    std::vector<BiTerm> out;
    for (const auto& [m, c] : poly.terms()) out.push_back({Elem{static_cast<std::uint32_t>(c)}, m.first, m.second});
    std::sort(out.begin(), out.end(), [](const BiTerm& a, const BiTerm& b) {
        return std::pair{a.j, a.i} < std::pair{b.j, b.i};
    });
    return out;
}

CurveModel parse_curve(std::string_view text, const Field& base) {
    auto trimmed = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trimmed(text);
    if (text == "rational") return CurveModel::rational(base);

    for (std::string_view prefix : {"y2=", "y^2="}) {
        if (text.substr(0, prefix.size()) != prefix) continue;
        const auto terms = parse_bivariate(text.substr(prefix.size()), base.p());
        std::vector<Elem> c;
        for (const auto& t : terms) {
            if (t.j != 0) throw Error(ErrorCode::ParseError, "right-hand side of y^2 = h(x) must not contain y");
            if (c.size() <= t.i) c.resize(t.i + 1, Field::zero());
            c[t.i] = t.coef;
        }
        return CurveModel::hyperelliptic(base, Poly(std::move(c)));
    }

    if (text.substr(0, 7) == "affine:") {
        std::vector<std::string_view> parts;
        std::string_view rest = text.substr(7);
        for (;;) {
            const auto colon = rest.find(':');
            parts.push_back(trimmed(rest.substr(0, colon)));
            if (colon == std::string_view::npos) break;
            rest.remove_prefix(colon + 1);
        }
        if (parts.size() < 2 || parts.size() > 3)
            throw Error(ErrorCode::ParseError, "expected affine:POLY:inf=K[:g=G]");
        const unsigned inf = parse_count(parts[1], "inf=");
        const unsigned genus = parts.size() == 3 ? parse_count(parts[2], "g=") : 0;
        auto terms = parse_bivariate(parts[0], base.p());
        if (terms.empty()) throw Error(ErrorCode::UnsupportedModel, "plane equation reduces to zero");
        return CurveModel::plane_affine(base, std::move(terms), inf, genus);
    }
    throw Error(ErrorCode::ParseError, "unrecognized curve \"" + std::string(text) + "\"");
}

}  // namespace sigmacode
