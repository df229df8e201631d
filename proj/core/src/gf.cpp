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

#include "sigmacode/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "resources.hpp"
#include "sigmacode/error.hpp"

namespace sigmacode {

struct Field::Tables {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> pw;    // p^i
    std::vector<std::uint32_t> exp;   // 2(q-1) entries so log sums need no reduction
    std::vector<std::uint32_t> log;
    std::vector<std::uint16_t> addt;  // q*q, only for q <= 256
    std::vector<std::uint32_t> negt;
    Elem primitive{};
};

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t idx, std::uint32_t p, std::uint32_t k) {
    Digits d(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        d[i] = idx % p;
        idx /= p;
    }
    return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
    std::uint32_t idx = 0;
    for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
    return idx;
}

// a*b mod (monic modulus) over F_p; a, b have k digits.
Digits mulmod(const Digits& a, const Digits& b, const std::vector<std::uint32_t>& modulus,
              std::uint32_t p) {
    const std::size_t k = modulus.size() - 1;
    std::vector<std::uint64_t> prod(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    for (std::size_t deg = 2 * k - 1; deg >= k && deg < 2 * k; --deg) {
        const std::uint64_t c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (std::size_t i = 0; i < k; ++i)
            prod[deg - k + i] = (prod[deg - k + i] + (p - c) * modulus[i]) % p;
    }
    Digits out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

// Remainder of a by monic b over F_p; both given lowest coefficient first.
std::vector<std::uint32_t> poly_rem_p(std::vector<std::uint32_t> a, std::span<const std::uint32_t> b,
                                      std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t c = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (c != 0)
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t(p - c) * b[i]) % p);
        a.pop_back();
    }
    return a;
}

struct ModulusTable {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> entries;
};

const ModulusTable& shipped_moduli() {
    static const ModulusTable table = [] {
        ModulusTable t;
        std::istringstream in{std::string(resources::moduli_table())};
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::uint32_t p = 0, k = 0;
            ls >> p >> k;
            std::vector<std::uint32_t> c(k + 1);
            for (auto& x : c) ls >> x;
            if (!ls) throw Error(ErrorCode::Internal, "malformed modulus table line: " + line);
            t.entries[{p, k}] = std::move(c);
        }
        return t;
    }();
    return table;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) noexcept {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return std::pair{q, 1u};
    unsigned a = 0;
    while (q % p == 0) {
        q /= p;
        ++a;
    }
    if (q != 1) return std::nullopt;
    return std::pair{p, a};
}

bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> coeffs) {
    if (coeffs.size() < 2 || coeffs.back() != 1) return false;
    const std::size_t k = coeffs.size() - 1;
    if (k == 1) return true;
    std::vector<std::uint32_t> f(coeffs.begin(), coeffs.end());
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> g(d + 1);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            const auto r = poly_rem_p(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) return false;
        }
    }
    return true;
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (modulus.size() < 2) throw Error(ErrorCode::InvalidArgument, "modulus must have degree >= 1");
    const std::uint32_t k = static_cast<std::uint32_t>(modulus.size() - 1);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw Error(ErrorCode::UnsupportedSize,
                        std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^14");
    }
    for (auto& c : modulus) c %= p;
    if (!is_irreducible_mod_p(p, modulus))
        throw Error(ErrorCode::ReducibleModulus,
                    "modulus for " + std::to_string(p) + "^" + std::to_string(k) + " is not irreducible");

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->k = k;
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = std::move(modulus);
    t->pw.resize(k + 1);
    t->pw[0] = 1;
    for (std::uint32_t i = 1; i <= k; ++i) t->pw[i] = t->pw[i - 1] * p;

    const std::uint32_t order = t->q - 1;
    t->log.assign(t->q, 0);
    t->exp.assign(2 * std::max<std::uint32_t>(order, 1), 0);
    // Smallest-index primitive element, found by walking its powers.
    for (std::uint32_t cand = 1; cand < t->q; ++cand) {
        const Digits g = to_digits(cand, p, k);
        Digits cur = to_digits(1, p, k);
        std::vector<std::uint32_t> powers;
        powers.reserve(order);
        bool ok = true;
        for (std::uint32_t i = 0; i < order; ++i) {
            const std::uint32_t idx = from_digits(cur, p);
            if (i > 0 && idx == 1) {
                ok = false;
                break;
            }
            powers.push_back(idx);
            cur = mulmod(cur, g, t->modulus, p);
        }
        if (!ok) continue;
        t->primitive = Elem{cand};
        for (std::uint32_t i = 0; i < order; ++i) {
            t->exp[i] = powers[i];
            t->exp[i + order] = powers[i];
            t->log[powers[i]] = i;
        }
        break;
    }

    t->negt.resize(t->q);
    for (std::uint32_t a = 0; a < t->q; ++a) {
        Digits d = to_digits(a, p, k);
        for (auto& x : d) x = (p - x) % p;
        t->negt[a] = from_digits(d, p);
    }
    if (t->q <= 256) {
        t->addt.resize(std::size_t(t->q) * t->q);
        for (std::uint32_t a = 0; a < t->q; ++a) {
            const Digits da = to_digits(a, p, k);
            for (std::uint32_t b = 0; b < t->q; ++b) {
                Digits db = to_digits(b, p, k);
                for (std::uint32_t i = 0; i < k; ++i) db[i] = (db[i] + da[i]) % p;
                t->addt[std::size_t(a) * t->q + b] = static_cast<std::uint16_t>(from_digits(db, p));
            }
        }
    }
    return Field(std::move(t));
}

Field Field::make(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw Error(ErrorCode::UnsupportedSize,
                        std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^14");
    }

    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, Field> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find({p, k}); it != cache.end()) return it->second;

    std::vector<std::uint32_t> modulus;
    if (k == 1) {
        modulus = {0, 1};
    } else {
        const auto& table = shipped_moduli().entries;
        auto it = table.find({p, k});
        if (it == table.end())
            throw Error(ErrorCode::UnsupportedSize,
                        "no shipped modulus for " + std::to_string(p) + "^" + std::to_string(k));
        modulus = it->second;
    }
    Field f = with_modulus(p, std::move(modulus));
    cache.emplace(std::pair{p, k}, f);
    return f;
}

Field Field::of_order(std::uint32_t q) {
    const auto pp = prime_power(q);
    if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    return make(static_cast<std::uint32_t>(pp->first), pp->second);
}

std::uint32_t Field::p() const noexcept { return t_->p; }
std::uint32_t Field::k() const noexcept { return t_->k; }
std::uint32_t Field::q() const noexcept { return t_->q; }
std::span<const std::uint32_t> Field::modulus() const noexcept { return t_->modulus; }

Elem Field::from_int(long long n) const noexcept {
    const long long p = t_->p;
    return Elem{static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Elem Field::element(std::uint32_t index) const {
    if (index >= t_->q) throw Error(ErrorCode::InvalidArgument, "element index out of range");
    return Elem{index};
}

Elem Field::add(Elem a, Elem b) const noexcept {
    const Tables& t = *t_;
    if (t.k == 1) {
        const std::uint32_t s = a.v + b.v;
        return Elem{s >= t.p ? s - t.p : s};
    }
    if (!t.addt.empty()) return Elem{t.addt[std::size_t(a.v) * t.q + b.v]};
    std::uint32_t out = 0;
    std::uint32_t x = a.v, y = b.v;
    for (std::uint32_t i = 0; i < t.k; ++i) {
        std::uint32_t d = x % t.p + y % t.p;
        if (d >= t.p) d -= t.p;
        out += d * t.pw[i];
        x /= t.p;
        y /= t.p;
    }
    return Elem{out};
}

Elem Field::neg(Elem a) const noexcept { return Elem{t_->negt[a.v]}; }

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (a.v == 0 || b.v == 0) return zero();
    const Tables& t = *t_;
    return Elem{t.exp[t.log[a.v] + t.log[b.v]]};
}

Elem Field::inv(Elem a) const {
    if (a.v == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const Tables& t = *t_;
    const std::uint32_t order = t.q - 1;
    return Elem{t.exp[(order - t.log[a.v]) % order]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return one();
    if (a.v == 0) return zero();
    const Tables& t = *t_;
    const std::uint64_t order = t.q - 1;
    return Elem{t.exp[(t.log[a.v] * (e % order)) % order]};
}

bool Field::is_square(Elem a) const noexcept {
    if (a.v == 0 || t_->p == 2) return true;
    return t_->log[a.v] % 2 == 0;
}

std::optional<Elem> Field::sqrt(Elem a) const noexcept {
    if (a.v == 0) return zero();
    if (t_->p == 2) return pow(a, t_->q / 2);
    if (!is_square(a)) return std::nullopt;
    const Elem r{t_->exp[t_->log[a.v] / 2]};
    const Elem s = neg(r);
    return r.v < s.v ? r : s;
}

Elem Field::frobenius(Elem a, std::uint32_t subq) const noexcept { return pow(a, subq); }

Elem Field::primitive() const noexcept { return t_->primitive; }

std::uint32_t Field::log(Elem a) const {
    if (a.v == 0) throw Error(ErrorCode::DivisionByZero, "log of zero");
    return t_->log[a.v];
}

Elem Field::exp(std::uint64_t e) const noexcept {
    return Elem{t_->exp[e % (t_->q - 1)]};
}

std::vector<std::uint32_t> Field::digits(Elem a) const { return to_digits(a.v, t_->p, t_->k); }

std::string Field::to_string(Elem a) const {
    if (t_->k == 1) return std::to_string(a.v);
    if (a.v == 0) return "0";
    const Digits d = digits(a);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]);
        out += "a";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

bool Field::operator==(const Field& other) const noexcept {
    return t_ == other.t_ || (t_->p == other.t_->p && t_->modulus == other.t_->modulus);
}

Embedding::Embedding(const Field& sub, const Field& sup) : sub_(sub), sup_(sup) {
    if (sub.p() != sup.p() || sup.k() % sub.k() != 0)
        throw Error(ErrorCode::NoEmbedding, "no embedding of F_" + std::to_string(sub.q()) + " into F_" +
                                                std::to_string(sup.q()));
    image_.resize(sub.q());
    inverse_.assign(sup.q(), -1);
    if (sub.k() == 1) {
        for (std::uint32_t c = 0; c < sub.q(); ++c) image_[c] = Elem{c};
    } else {
        const auto mod = sub.modulus();
        std::optional<Elem> root;
        for (std::uint32_t idx = 0; idx < sup.q() && !root; ++idx) {
            const Elem z{idx};
            Elem acc = Field::zero();
            for (std::size_t i = mod.size(); i-- > 0;) acc = sup.add(sup.mul(acc, z), Elem{mod[i]});
            if (acc == Field::zero()) root = z;
        }
        if (!root) throw Error(ErrorCode::Internal, "sub modulus has no root in the extension");
        for (std::uint32_t idx = 0; idx < sub.q(); ++idx) {
            const auto d = sub.digits(Elem{idx});
            Elem acc = Field::zero();
            for (std::size_t i = d.size(); i-- > 0;) acc = sup.add(sup.mul(acc, *root), Elem{d[i]});
            image_[idx] = acc;
        }
    }
    for (std::uint32_t idx = 0; idx < sub.q(); ++idx) inverse_[image_[idx].v] = static_cast<std::int32_t>(idx);
}

std::optional<Elem> Embedding::preimage(Elem e) const noexcept {
    const std::int32_t v = inverse_[e.v];
    if (v < 0) return std::nullopt;
    return Elem{static_cast<std::uint32_t>(v)};
}

Extension::Extension(const Field& base, unsigned r)
    : r_(r), embed_(base, r == 1 ? base : Field::make(base.p(), base.k() * r)) {
    if (r == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
    const Field& big = embed_.sup();
    const std::uint32_t q = base.q();
    // theta: smallest-index element whose Frobenius orbit has exactly r elements.
    Elem theta = Field::one();
    for (std::uint32_t idx = 0; idx < big.q(); ++idx) {
        Elem z{idx};
        unsigned orbit = 1;
        for (Elem w = big.pow(z, q); w != z; w = big.pow(w, q)) ++orbit;
        if (orbit == r) {
            theta = z;
            break;
        }
    }
    std::vector<Elem> basis(r);
    basis[0] = Field::one();
    for (unsigned j = 1; j < r; ++j) basis[j] = big.mul(basis[j - 1], theta);

    coords_.assign(static_cast<std::size_t>(big.q()) * r, Elem{});
    std::vector<bool> seen(big.q(), false);
    std::vector<std::uint32_t> c(r, 0);
    for (std::uint64_t n = 0; n < big.q(); ++n) {
        std::uint64_t t = n;
        Elem z = Field::zero();
        for (unsigned j = 0; j < r; ++j) {
            c[j] = static_cast<std::uint32_t>(t % q);
            t /= q;
            z = big.add(z, big.mul(embed_(Elem{c[j]}), basis[j]));
        }
        if (seen[z.v]) throw Error(ErrorCode::Internal, "extension basis is not independent");
        seen[z.v] = true;
        for (unsigned j = 0; j < r; ++j) coords_[std::size_t(z.v) * r + j] = Elem{c[j]};
    }
}

Elem Extension::frobenius(Elem e) const noexcept { return field().pow(e, base().q()); }

}  // namespace sigmacode
