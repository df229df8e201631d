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

#ifndef SIGMACODE_GF_HPP
#define SIGMACODE_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sigmacode {

/// Element of a small finite field F_{p^k}.
///
/// The value is the base-p encoding c_0 + c_1 p + ... + c_{k-1} p^{k-1} of the
/// residue c_0 + c_1 u + ... modulo the field's modulus. Index 0 is zero,
/// index 1 is one, and enumeration order is increasing index.
struct Elem {
    std::uint32_t v = 0;

    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 14;

/// F_{p^k} with a fixed monic irreducible modulus, p^k <= 2^14.
///
/// Cheap to copy: the arithmetic tables are shared and immutable.
class Field {
   public:
    /// Uses the shipped modulus for (p, k); k = 1 uses the modulus x.
    static Field make(std::uint32_t p, std::uint32_t k);

    /// Field of order q, q a prime power.
    static Field of_order(std::uint32_t q);

    /// Explicit modulus c_0..c_k over F_p (monic). Irreducibility is verified.
    static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const noexcept;
    std::uint32_t k() const noexcept;
    std::uint32_t q() const noexcept;
    std::span<const std::uint32_t> modulus() const noexcept;

    static constexpr Elem zero() noexcept { return {0}; }
    static constexpr Elem one() noexcept { return {1}; }

    /// Image of an integer in the prime subfield.
    Elem from_int(long long n) const noexcept;
    Elem element(std::uint32_t index) const;

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;  // throws DivisionByZero
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    bool is_square(Elem a) const noexcept;
    /// Square root with the smaller index, or nullopt for non-squares.
    std::optional<Elem> sqrt(Elem a) const noexcept;

    /// a^subq; subq must be a power of p.
    Elem frobenius(Elem a, std::uint32_t subq) const noexcept;

    /// Smallest-index generator of the multiplicative group.
    Elem primitive() const noexcept;
    std::uint32_t log(Elem a) const;  // a != 0
    Elem exp(std::uint64_t e) const noexcept;

    /// Base-p digits of an element (k entries).
    std::vector<std::uint32_t> digits(Elem a) const;
    std::string to_string(Elem a) const;

    bool operator==(const Field& other) const noexcept;

   private:
    struct Tables;
    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n) noexcept;

/// (p, a) with q = p^a, or nullopt.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) noexcept;

/// True when the monic polynomial (coefficients c_0..c_k over F_p) has no factor of degree <= k/2.
bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> coeffs);

/// Ring-homomorphic injection sub -> sup sending sub's generator to the
/// smallest-index root of sub's modulus in sup.
class Embedding {
   public:
    Embedding(const Field& sub, const Field& sup);

    const Field& sub() const noexcept { return sub_; }
    const Field& sup() const noexcept { return sup_; }

    Elem operator()(Elem e) const noexcept { return image_[e.v]; }
    /// Inverse on the image; nullopt outside the subfield.
    std::optional<Elem> preimage(Elem e) const noexcept;

   private:
    Field sub_;
    Field sup_;
    std::vector<Elem> image_;
    std::vector<std::int32_t> inverse_;
};

/// F_{q^r} seen as an r-dimensional F_q-space with basis 1, theta, ..., theta^{r-1}.
class Extension {
   public:
    Extension(const Field& base, unsigned r);

    const Field& base() const noexcept { return embed_.sub(); }
    const Field& field() const noexcept { return embed_.sup(); }
    unsigned degree() const noexcept { return r_; }
    const Embedding& embedding() const noexcept { return embed_; }

    Elem lift(Elem base_elem) const noexcept { return embed_(base_elem); }
    std::optional<Elem> lower(Elem e) const noexcept { return embed_.preimage(e); }

    /// e -> e^q.
    Elem frobenius(Elem e) const noexcept;

    /// F_q-coordinates of e (length r).
    std::span<const Elem> coordinates(Elem e) const noexcept {
        return {coords_.data() + static_cast<std::size_t>(e.v) * r_, r_};
    }

   private:
    unsigned r_;
    Embedding embed_;
    std::vector<Elem> coords_;
};

}  // namespace sigmacode

#endif
