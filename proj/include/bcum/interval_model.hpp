#pragma once

// Two differential graded algebras on the interval [0,1]:
//   * polynomial differential forms  f(t) + g(t) dt, with wedge and d;
//   * simplicial cochains on the single 1-cell, (v0, v1; r dt), with the
//     Alexander-Whitney cup product and the coboundary delta;
// and the maps between them: integration I and the iterated integrals I_n.

#include "bcum/polynomial.hpp"
#include "bcum/rational.hpp"

#include <array>
#include <span>
#include <vector>

namespace bcum {

struct PolyForm {
    Polynomial part0;  // f(t)
    Polynomial part1;  // g(t), the coefficient of dt

    static PolyForm zero_form(Polynomial f) { return {std::move(f), {}}; }
    static PolyForm one_form(Polynomial g) { return {{}, std::move(g)}; }
    /// t^k, or t^k dt when one_form is set.
    static PolyForm monomial(std::size_t k, bool one_form, const Rational& c = Rational(1));

    bool is_zero() const { return part0.is_zero() && part1.is_zero(); }
    bool is_homogeneous() const { return part0.is_zero() || part1.is_zero(); }
    /// Degree of a homogeneous form (zero counts as degree 0).
    int degree() const { return part0.is_zero() && !part1.is_zero() ? 1 : 0; }

    PolyForm& operator+=(const PolyForm& o) { part0 += o.part0; part1 += o.part1; return *this; }
    PolyForm& operator-=(const PolyForm& o) { part0 -= o.part0; part1 -= o.part1; return *this; }
    PolyForm& operator*=(const Rational& s) { part0 *= s; part1 *= s; return *this; }
    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
    friend PolyForm operator*(const Rational& s, PolyForm a) { return a *= s; }

    friend bool operator==(const PolyForm&, const PolyForm&) = default;
};

struct Cochain {
    Rational v0;    // value on vertex 0
    Rational v1;    // value on vertex 1
    Rational edge;  // coefficient of dt

    static Cochain vertices(Rational a, Rational b) { return {std::move(a), std::move(b), Rational(0)}; }
    static Cochain edge_only(Rational r) { return {Rational(0), Rational(0), std::move(r)}; }

    bool is_zero() const { return v0.is_zero() && v1.is_zero() && edge.is_zero(); }
    bool is_homogeneous() const { return edge.is_zero() || (v0.is_zero() && v1.is_zero()); }
    int degree() const { return v0.is_zero() && v1.is_zero() && !edge.is_zero() ? 1 : 0; }

    Cochain& operator+=(const Cochain& o) { v0 += o.v0; v1 += o.v1; edge += o.edge; return *this; }
    Cochain& operator-=(const Cochain& o) { v0 -= o.v0; v1 -= o.v1; edge -= o.edge; return *this; }
    Cochain& operator*=(const Rational& s) { v0 *= s; v1 *= s; edge *= s; return *this; }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& s, Cochain a) { return a *= s; }
    Cochain operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// The homogeneous components of a form: degree 0 first, then degree 1; zero
/// components are dropped.
std::vector<PolyForm> homogeneous_parts(const PolyForm& a);

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm d_form(const PolyForm& a);

/// Alexander-Whitney cup on the 1-simplex:
///   (F cup G) on vertices = F*G pointwise,
///   (F cup G) on the edge = F(0) G[01] + F[01] G(1).
Cochain cup(const Cochain& a, const Cochain& b);
Cochain delta(const Cochain& a);

/// I: restriction of the 0-form part to the endpoints, integral of the dt part.
Cochain integrate(const PolyForm& a);

/// I_n. For n = 1 this is integrate(); for n >= 2 it is the iterated integral
/// over t_1 <= ... <= t_n of the dt-coefficients, as a multiple of dt (the
/// 0-form components of the inputs contribute nothing). Throws
/// std::invalid_argument on an empty input sequence.
Cochain iterated_integral(std::span<const PolyForm> inputs);

/// The standard basis of the cochains: 1 on vertex 0, 1 on vertex 1, dt.
std::array<Cochain, 3> cochain_basis();

}  // namespace bcum
