#pragma once

#include "bcum/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bcum {

/// Univariate polynomial in t with rational coefficients. coeffs()[k] is the
/// coefficient of t^k; trailing zeros are always stripped, so the zero
/// polynomial has no coefficients and equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial monomial(std::size_t k, const Rational& c = Rational(1));

    std::span<const Rational> coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree of the polynomial; -1 for zero.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational operator()(const Rational& t) const;

    Polynomial derivative() const;
    /// The antiderivative vanishing at 0.
    Polynomial antiderivative() const;
    /// Integral over [0, 1].
    Rational integral01() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const { return *this * Rational(-1); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize();
    std::vector<Rational> c_;
};

}  // namespace bcum
