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

#ifndef SIGMACODE_CURVE_HPP
#define SIGMACODE_CURVE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sigmacode/divisor.hpp"
#include "sigmacode/function.hpp"
#include "sigmacode/gf.hpp"
#include "sigmacode/poly.hpp"
#include "sigmacode/series.hpp"

namespace sigmacode {

enum class ModelKind { Rational, Hyperelliptic, PlaneAffine };

/// coef * x^i * y^j.
struct BiTerm {
    Elem coef;
    unsigned i = 0;
    unsigned j = 0;
};

/// Local parameters at a place: x and y as Laurent series in a uniformizer t.
///
/// Coordinates are over F_{q^deg} and carry relative precision prec.
struct LocalCoordinates {
    Laurent x;
    Laurent y;
    int prec = 0;
};

/// Symbol of F_q ∪ {∞}; nullopt is ∞.
using Symbol = std::optional<Elem>;

class CurveModel {
   public:
    /// Projective line, genus 0.
    static CurveModel rational(const Field& base);
    /// y^2 = h(x), deg h in {3, 4}, h squarefree, odd characteristic; genus 1.
    static CurveModel hyperelliptic(const Field& base, Poly h);
    /// f(x, y) = 0 with user-declared rational infinite places and genus.
    /// Supports point counting only.
    static CurveModel plane_affine(const Field& base, std::vector<BiTerm> f, unsigned infinite_places,
                                   unsigned genus);

    ModelKind kind() const noexcept;
    const Field& base() const noexcept;
    unsigned genus() const noexcept;
    /// Right-hand side of y^2 = h(x); zero for other models.
    const Poly& h() const noexcept;
    const std::vector<BiTerm>& affine_equation() const noexcept;
    unsigned declared_infinite_places() const noexcept;
    std::string description() const;

    /// F_{q^r} over the base field, built once per r.
    const Extension& extension(unsigned r) const;
    /// h lifted to F_{q^r}.
    const Poly& h_over(unsigned r) const;

    /// Cached local coordinates; thread-safe.
    std::shared_ptr<const LocalCoordinates> local_coordinates(const Place& p, int prec) const;

    /// Cached monic irreducibles of degree d <= 3 over the base field.
    const std::vector<Poly>& irreducibles(unsigned d) const;

   private:
    struct Impl;
    explicit CurveModel(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<Impl> impl_;
};

std::string to_string(const CurveModel& m, const Place& p);

/// Degree-1 places in canonical order.
std::vector<Place> rational_places(const CurveModel& m);
/// Places of degree exactly r (1 <= r <= 3) in canonical order.
std::vector<Place> places_of_degree(const CurveModel& m, unsigned r);
/// Rational places of the constant field extension of degree r.
std::uint64_t point_count(const CurveModel& m, unsigned r);
/// Places at infinity in canonical order.
std::vector<Place> infinite_places(const CurveModel& m);
/// Finite places above the monic irreducible pi(x), deg pi <= 3.
std::vector<Place> places_over(const CurveModel& m, const Poly& pi);

/// Ramification index of the place over the x-line (2 at ramified points and
/// at infinity of cubic models).
unsigned ramification(const CurveModel& m, const Place& p);
/// Minimal polynomial over F_q of the x-coordinate of a finite place.
Poly x_polynomial(const CurveModel& m, const Place& p);

/// a(x) + b(x)*y at the place, with coordinates of relative precision prec.
Laurent expand_numerator(const CurveModel& m, const Place& p, const Poly& a, const Poly& b, int prec);
/// Expansion of f, exact below t^prec; prec <= 64.
Laurent local_expand(const CurveModel& m, const Place& p, const FunctionElt& f, int prec);
/// nullopt for f = 0.
std::optional<int> valuation(const CurveModel& m, const Place& p, const FunctionElt& f);
/// f(P) for a rational place P.
Symbol evaluate(const CurveModel& m, const FunctionElt& f, const Place& p);
/// (f) = sum nu_P(f) P; throws UnsupportedFactor when a zero or pole lies
/// over an x-factor of degree > 3.
Divisor principal_divisor(const CurveModel& m, const FunctionElt& f);

/// Irreducible factorization of a nonzero polynomial using factors of degree
/// <= 3; throws UnsupportedFactor when a larger factor remains.
std::vector<std::pair<Poly, unsigned>> factor_small(const CurveModel& m, const Poly& a);

}  // namespace sigmacode

#endif
