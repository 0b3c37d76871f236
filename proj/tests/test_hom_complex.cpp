#include "bcum/hom_complex.hpp"

#include <doctest.h>

#include <random>

using namespace bcum;

namespace {

constexpr auto A = SignConvention::KoszulLeft;
constexpr auto B = SignConvention::KoszulRight;

const PolyForm dt = PolyForm::monomial(0, true);
PolyForm t_pow(std::size_t k) { return PolyForm::monomial(k, false); }

int sgn(int e) { return e % 2 == 0 ? 1 : -1; }

Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    return Rational(num(rng), den(rng));
}

PolyForm random_form(std::mt19937& rng)
{
    std::vector<Rational> p0;
    std::vector<Rational> p1;
    for (int k = 0; k <= 2; ++k) {
        p0.push_back(random_rational(rng));
        p1.push_back(random_rational(rng));
    }
    return {Polynomial(p0), Polynomial(p1)};
}

}  // namespace

TEST_CASE("conventions")
{
    CHECK(parse_convention("A") == A);
    CHECK(parse_convention("koszul-right") == B);
    CHECK(convention_name(A) == "A");
    CHECK_THROWS_AS(parse_convention("C"), std::invalid_argument);
    const std::vector<int> none;
    CHECK(suspension_sign(A, none) == 1);
    CHECK(suspension_sign(B, none) == 1);
}

TEST_CASE("named maps")
{
    CHECK(iterated_integral_map(1)({t_pow(2)}) == integrate(t_pow(2)));
    CHECK(iterated_integral_map(3).shifted_degree() == 0);
    CHECK(iterated_integral_map(3).degree() == -2);
    CHECK(iterated_integral_map(2)({dt, dt}) == Cochain::edge_only(Rational(1, 2)));
    // (n-1)(n-2)/2 is odd for n = 3, 4
    CHECK(unshifted_component(3)({dt, dt, dt}) == Cochain::edge_only(Rational(-1, 6)));
    CHECK(unshifted_component(4)({dt, dt, dt, dt}) == Cochain::edge_only(Rational(-1, 24)));
    CHECK(unshifted_component(5)({dt, dt, dt, dt, dt}) == Cochain::edge_only(Rational(1, 120)));
    CHECK(cumulant_map(2)({t_pow(1), dt}) == Cochain::edge_only(Rational(1, 2)));
    CHECK_THROWS(iterated_integral_map(2)({dt}));
}

TEST_CASE("MultiMap is the multilinear extension")
{
    std::mt19937 rng(7);
    const auto f = cumulant_map(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<PolyForm> xs{random_form(rng), random_form(rng), random_form(rng)};
        const auto y = random_form(rng);
        const auto s = random_rational(rng);
        const auto slot = static_cast<std::size_t>(trial % 3);
        auto mixed = xs;
        mixed[slot] = xs[slot] + s * y;
        auto other = xs;
        other[slot] = y;
        CHECK(f(mixed) == f(xs) + s * f(other));
    }
    const auto g = 2 * iterated_integral_map(2) - cumulant_map(2);
    CHECK(g({dt, t_pow(1) + dt}) == Rational(2) * iterated_integral_map(2)({dt, t_pow(1) + dt}) -
                                        cumulant_map(2)({dt, t_pow(1) + dt}));
    CHECK_THROWS_AS(iterated_integral_map(2) + iterated_integral_map(3), std::invalid_argument);
}

TEST_CASE("hom_boundary in arity one")
{
    // h(f + g dt) = (g(0), g(0)): unshifted degree -1, so ∂h = δh + h∘d
    const MultiMap h(1, -1, [](std::span<const PolyForm> x) {
        const Rational g0 = x[0].part1(Rational(0));
        return Cochain::vertices(g0, g0);
    });
    for (auto conv : {A, B}) {
        const auto dh = hom_boundary(h, conv);
        CHECK(dh.shifted_degree() == 0);
        CHECK(dh({t_pow(1)}) == Cochain::vertices(Rational(1), Rational(1)));
        CHECK(dh({t_pow(2)}).is_zero());
        CHECK(dh({dt}).is_zero());
        CHECK(hom_boundary(iterated_integral_map(1), conv)({t_pow(3)}).is_zero());
    }
}

TEST_CASE("hom_boundary squares to zero")
{
    const TruncationGrid grid{3};
    for (auto conv : {A, B})
        for (int n = 1; n <= 3; ++n) {
            const auto dd = hom_boundary(hom_boundary(cumulant_map(n), conv), conv);
            CHECK(is_zero_on_truncation(dd, grid).equal);
        }
}

TEST_CASE("shifted combinators against the unshifted composites")
{
    const TruncationGrid grid{2};
    // f ∘ (1^r ⊗ m2 ⊗ 1^t) = (-1)^{n-r} f(.., a_r a_{r+1}, ..), n the result arity
    for (int p = 1; p <= 3; ++p) {
        const auto f = iterated_integral_map(p);
        const int n = p + 1;
        for (int r = 0; r < p; ++r) {
            const auto lhs = insert_source(f, r, 2, A);
            const auto rhs = Rational(sgn(n - r)) * precompose_product(f, r);
            CHECK(maps_equal_on_truncation(lhs, rhs, grid).equal);
        }
    }
    // m2 ∘ (f ⊗ g) = (-1)^{p(1-|g|) + |f| - 1} cup ∘ (f ⊗ g), p = arity(f), unshifted degrees
    for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q) {
            const auto f = iterated_integral_map(p);
            const auto g = cumulant_map(q);
            const std::vector fs{f, g};
            const int e = p * (1 - g.degree()) + f.degree() - 1;
            const auto rhs = Rational(sgn(((e % 2) + 2) % 2)) * cup_maps(f, g, A);
            CHECK(maps_equal_on_truncation(target_operation(fs, A), rhs, grid).equal);
        }
    // higher operations vanish on both sides
    CHECK(is_zero_on_truncation(insert_source(iterated_integral_map(1), 0, 3, A), grid).equal);
    const std::vector three{iterated_integral_map(1), iterated_integral_map(1), iterated_integral_map(1)};
    CHECK(is_zero_on_truncation(target_operation(three, A), grid).equal);
}

TEST_CASE("∂I_2 = K_2 and the witnesses")
{
    CHECK(maps_equal_on_truncation(hom_boundary(iterated_integral_map(2), A), cumulant_map(2), TruncationGrid{8})
              .equal);
    for (int n = 2; n <= 4; ++n)
        CHECK(maps_equal_on_truncation(hom_boundary(homotopy_witness(n, A), A), cumulant_map(n), TruncationGrid{3})
                  .equal);
    for (auto v : {WitnessVariant::Left, WitnessVariant::Right})
        CHECK(maps_equal_on_truncation(hom_boundary(alternate_witness_k3(v, A), A), cumulant_map(3),
                                       TruncationGrid{3})
                  .equal);
    CHECK(parse_witness_variant("left") == WitnessVariant::Left);
    CHECK_THROWS_AS(parse_witness_variant("middle"), std::invalid_argument);

    const auto sq = square_cycle(A);
    CHECK(is_zero_on_truncation(hom_boundary(sq, A), TruncationGrid{3}).equal);
    CHECK(maps_equal_on_truncation(sq, hom_boundary(unshifted_component(3), A), TruncationGrid{3}).equal);
    CHECK(maps_equal_on_truncation(sq, Rational(-1) * hom_boundary(iterated_integral_map(3), A), TruncationGrid{3})
              .equal);
}

TEST_CASE("the pinned convention makes the integrals an A∞ morphism")
{
    for (int n = 1; n <= 4; ++n)
        CHECK(ainfty_relation_defect(n, 3, A).verdict.equal);
    CHECK(ainfty_relation_defect(1, 3, B).verdict.equal);
    for (int n = 2; n <= 3; ++n) {
        const auto r = ainfty_relation_defect(n, 3, B);
        CHECK_FALSE(r.verdict.equal);
        REQUIRE(r.verdict.witness.has_value());
        CHECK(r.verdict.witness->size() == static_cast<std::size_t>(n));
        CHECK_FALSE(r.defect(*r.verdict.witness).is_zero());
    }
}

TEST_CASE("truncation verdicts")
{
    const TruncationGrid grid{2};
    CHECK(grid.basis().size() == 6);
    CHECK(grid.basis()[3] == dt);
    CHECK(grid.slot_size() == 6);

    // I_2 and 0 first differ on (dt, dt): index 3 in each slot, and every
    // earlier tuple contains a 0-form
    const auto v = is_zero_on_truncation(iterated_integral_map(2), grid, "probe");
    CHECK_FALSE(v.equal);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == std::vector{dt, dt});
    CHECK(*v.lhs == Cochain::edge_only(Rational(1, 2)));
    CHECK(v.rhs->is_zero());

    const auto j = v.to_json();
    CHECK(j["check"] == "probe");
    CHECK(j["arity"] == 2);
    CHECK(j["grid_D"] == 2);
    CHECK(j["status"] == "fail");
    CHECK(j["witness_tuple"].size() == 2);
    CHECK(j.contains("lhs"));
    CHECK(j.contains("rhs"));

    const auto ok = maps_equal_on_truncation(cumulant_map(2), cumulant_map(2), grid);
    CHECK(ok.equal);
    CHECK(ok.to_json()["status"] == "pass");
    CHECK_THROWS_AS(maps_equal_on_truncation(cumulant_map(2), cumulant_map(3), grid), std::invalid_argument);

    // the threaded path reports the same first witness as a serial scan
    const auto big = is_zero_on_truncation(iterated_integral_map(4), TruncationGrid{3});
    REQUIRE(big.witness.has_value());
    CHECK(*big.witness == std::vector{dt, dt, dt, dt});
}
