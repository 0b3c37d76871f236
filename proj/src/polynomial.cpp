#include "bcum/polynomial.hpp"

#include <algorithm>

namespace bcum {

Polynomial Polynomial::monomial(std::size_t k, const Rational& c)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational Polynomial::operator()(const Rational& t) const
{
    // Horner
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        v[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::antiderivative() const
{
    if (c_.empty())
        return {};
    std::vector<Rational> v(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k)
        v[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
    return Polynomial(std::move(v));
}

Rational Polynomial::integral01() const
{
    Rational acc;
    for (std::size_t k = 0; k < c_.size(); ++k)
        acc += c_[k] / Rational(static_cast<long>(k + 1));
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s)
{
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
}

}  // namespace bcum
