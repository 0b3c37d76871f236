#include "bcum/interval_model.hpp"

#include <stdexcept>

namespace bcum {

PolyForm PolyForm::monomial(std::size_t k, bool one_form, const Rational& c)
{
    auto p = Polynomial::monomial(k, c);
    return one_form ? PolyForm::one_form(std::move(p)) : PolyForm::zero_form(std::move(p));
}

std::vector<PolyForm> homogeneous_parts(const PolyForm& a)
{
    std::vector<PolyForm> parts;
    if (!a.part0.is_zero())
        parts.push_back(PolyForm::zero_form(a.part0));
    if (!a.part1.is_zero())
        parts.push_back(PolyForm::one_form(a.part1));
    return parts;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b)
{
    // dt ^ dt = 0 on a 1-manifold
    return {a.part0 * b.part0, a.part0 * b.part1 + a.part1 * b.part0};
}

PolyForm d_form(const PolyForm& a)
{
    return PolyForm::one_form(a.part0.derivative());
}

Cochain cup(const Cochain& a, const Cochain& b)
{
    return {a.v0 * b.v0, a.v1 * b.v1, a.v0 * b.edge + a.edge * b.v1};
}

Cochain delta(const Cochain& a)
{
    return Cochain::edge_only(a.v1 - a.v0);
}

Cochain integrate(const PolyForm& a)
{
    return {a.part0(Rational(0)), a.part0(Rational(1)), a.part1.integral01()};
}

Cochain iterated_integral(std::span<const PolyForm> inputs)
{
    if (inputs.empty())
        throw std::invalid_argument("iterated_integral: needs at least one input");
    if (inputs.size() == 1)
        return integrate(inputs.front());

    // J_1 = antiderivative of f_1, J_k = antiderivative of f_k * J_{k-1}
    Polynomial running = inputs.front().part1.antiderivative();
    for (std::size_t k = 1; k < inputs.size() && !running.is_zero(); ++k)
        running = (inputs[k].part1 * running).antiderivative();
    return Cochain::edge_only(running(Rational(1)));
}

std::array<Cochain, 3> cochain_basis()
{
    return {Cochain::vertices(Rational(1), Rational(0)), Cochain::vertices(Rational(0), Rational(1)),
            Cochain::edge_only(Rational(1))};
}

}  // namespace bcum
