#include "bcum/cumulants.hpp"

#include <doctest.h>

#include <set>

using namespace bcum;

namespace {

const PolyForm dt = PolyForm::monomial(0, true);
PolyForm t_pow(std::size_t k) { return PolyForm::monomial(k, false); }

std::vector<PolyForm> basis(int D)
{
    std::vector<PolyForm> b;
    for (int k = 0; k <= D; ++k) {
        b.push_back(PolyForm::monomial(static_cast<std::size_t>(k), false));
        b.push_back(PolyForm::monomial(static_cast<std::size_t>(k), true));
    }
    return b;
}

void tuples(const std::vector<PolyForm>& b, int n, std::vector<PolyForm>& cur,
            const std::function<void(const std::vector<PolyForm>&)>& f)
{
    if (static_cast<int>(cur.size()) == n) {
        f(cur);
        return;
    }
    for (const auto& x : b) {
        cur.push_back(x);
        tuples(b, n, cur, f);
        cur.pop_back();
    }
}

}  // namespace

TEST_CASE("compositions")
{
    CHECK(compositions(1).size() == 1);
    const auto c3 = compositions(3);
    REQUIRE(c3.size() == 4);
    CHECK(c3[0].blocks == std::vector{3});
    CHECK(c3[1].blocks == std::vector{1, 2});
    CHECK(c3[2].blocks == std::vector{2, 1});
    CHECK(c3[3].blocks == std::vector{1, 1, 1});
    CHECK(compositions(5).size() == 16);
    CHECK_THROWS_AS(compositions(0), std::invalid_argument);
    for (int n = 1; n <= 8; ++n) {
        std::set<std::vector<int>> seen;
        for (const auto& c : compositions(n)) {
            CHECK(c.n() == n);
            for (int b : c.blocks)
                CHECK(b >= 1);
            CHECK(Composition::from_cuts(n, c.cuts()) == c);
            seen.insert(c.blocks);
        }
        CHECK(seen.size() == (1UL << (n - 1)));
    }
}

TEST_CASE("composition signs")
{
    CHECK(composition_sign({{3}}) == 1);
    CHECK(composition_sign({{1, 2}}) == -1);
    CHECK(composition_sign({{1, 1, 1}}) == 1);
    CHECK(cumulant_formula(3) == "e(abc) - e(a)e(bc) - e(ab)e(c) + e(a)e(b)e(c)");
    CHECK(cumulant_formula(1) == "e(a)");
}

TEST_CASE("cumulants of the integration map")
{
    const auto& I = integration_context();
    // I(t dt) - I(t) ∪ I(dt) = 1/2 dt - (0,1) ∪ 1 dt, and (0,1) ∪ dt = 0 * dt
    CHECK(cumulant(I, std::vector{t_pow(1), dt}) == Cochain::edge_only(Rational(1, 2)));
    const PolyForm c{Polynomial::constant(Rational(5, 3)), {}};
    CHECK(cumulant(I, std::vector{c}) == Cochain::vertices(Rational(5, 3), Rational(5, 3)));
    CHECK(cumulant(I, std::vector{t_pow(1), t_pow(1)}).is_zero());
    CHECK(cumulant_recursive(I, std::vector{t_pow(1), dt}) == Cochain::edge_only(Rational(1, 2)));
    CHECK(cumulant_recursive(I, std::vector{t_pow(3)}) == integrate(t_pow(3)));
    CHECK(cumulant_recursive(I, std::vector{dt, dt, dt}) == cumulant(I, std::vector{dt, dt, dt}));
    CHECK_THROWS_AS(cumulant(I, std::vector<PolyForm>{}), std::invalid_argument);
    CHECK_THROWS_AS(cumulant_recursive(I, std::vector<PolyForm>{}), std::invalid_argument);
}

TEST_CASE("direct and recursive cumulants agree")
{
    const auto& I = integration_context();
    for (int n = 1; n <= 5; ++n) {
        const int D = n <= 4 ? 4 : 2;
        std::vector<PolyForm> cur;
        long mismatches = 0;
        tuples(basis(D), n, cur, [&](const std::vector<PolyForm>& t) {
            if (cumulant(I, t) != cumulant_recursive(I, t))
                ++mismatches;
        });
        CHECK(mismatches == 0);
    }
}

TEST_CASE("term structure")
{
    const auto& I = integration_context();
    for (int n = 1; n <= 6; ++n) {
        const std::vector<PolyForm> xs(static_cast<std::size_t>(n), dt);
        CHECK(cumulant_terms(I, xs).size() == (1UL << (n - 1)));
    }
    for (const auto& a : basis(4))
        for (const auto& b : basis(4))
            CHECK(cumulant(I, std::vector{a, b}) == integrate(wedge(a, b)) - cup(integrate(a), integrate(b)));
}

TEST_CASE("an algebra morphism has vanishing higher cumulants")
{
    const auto& e = evaluation_context();
    std::vector<PolyForm> zero_forms;
    for (std::size_t k = 0; k <= 4; ++k)
        zero_forms.push_back(PolyForm{Polynomial({Rational(static_cast<long>(k) + 1), Rational(-1)}) *
                                          Polynomial::monomial(k),
                                      {}});
    for (int n = 2; n <= 4; ++n) {
        std::vector<PolyForm> cur;
        tuples(zero_forms, n, cur, [&](const std::vector<PolyForm>& t) { CHECK(cumulant(e, t).is_zero()); });
    }
    // while the integration map has a nonzero K_2
    CHECK_FALSE(cumulant(integration_context(), std::vector{t_pow(1), dt}).is_zero());
}

TEST_CASE("contexts must be chain maps")
{
    // endpoint evaluation does not commute with the differentials
    auto endpoints = [](const PolyForm& a) { return Cochain::vertices(a.part0(Rational(0)), a.part0(Rational(1))); };
    CHECK_THROWS_AS(CumulantContext(endpoints, wedge, cup), std::invalid_argument);
}
