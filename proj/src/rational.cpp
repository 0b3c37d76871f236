#include "bcum/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bcum {

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class to_mpz(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw std::invalid_argument("Rational: malformed numerator '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(mpq_class(to_mpz(num)));
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("Rational: malformed denominator '" + std::string(text) + "'");
    mpz_class d = to_mpz(den);
    if (d == 0)
        throw std::domain_error("Rational: zero denominator");
    return Rational(mpq_class(to_mpz(num), d));
}

std::string Rational::str() const
{
    if (is_integer())
        return numerator_string();
    return fraction_str();
}

}  // namespace bcum
