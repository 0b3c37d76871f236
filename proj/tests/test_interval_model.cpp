#include "bcum/interval_model.hpp"
#include "bcum/text_io.hpp"

#include <doctest.h>

#include <random>

using namespace bcum;

namespace {

PolyForm t_pow(std::size_t k) { return PolyForm::monomial(k, false); }
PolyForm t_pow_dt(std::size_t k) { return PolyForm::monomial(k, true); }
const PolyForm dt = PolyForm::monomial(0, true);

// coefficient-array oracles, independent of Polynomial
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

std::vector<Rational> power_rule(const std::vector<Rational>& a)
{
    std::vector<Rational> c;
    for (std::size_t k = 1; k < a.size(); ++k)
        c.push_back(Rational(static_cast<long>(k)) * a[k]);
    return c;
}

// ∫_{t1<=..<=tn} t1^k1 .. tn^kn dt = 1 / prod_j (k1 + .. + kj + j)
Rational simplex_moment(const std::vector<long>& ks)
{
    Rational r(1);
    long partial = 0;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        partial += ks[j] + 1;
        r /= Rational(partial);
    }
    return r;
}

Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    return Rational(num(rng), den(rng));
}

PolyForm random_form(std::mt19937& rng, int max_exp)
{
    std::vector<Rational> p0;
    std::vector<Rational> p1;
    for (int k = 0; k <= max_exp; ++k) {
        p0.push_back(random_rational(rng));
        p1.push_back(random_rational(rng));
    }
    return {Polynomial(p0), Polynomial(p1)};
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(6, 3).fraction_str() == "2/1");
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK_THROWS(Rational::parse("1/"));
}

TEST_CASE("polynomials strip trailing zeros")
{
    Polynomial p({Rational(1), Rational(0), Rational(0)});
    CHECK(p.coeffs().size() == 1);
    CHECK((Polynomial::monomial(2) - Polynomial::monomial(2)).is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial::monomial(3).antiderivative() == Polynomial::monomial(4, Rational(1, 4)));
    CHECK(Polynomial::monomial(3).integral01() == Rational(1, 4));
    CHECK(Polynomial({Rational(1), Rational(2)})(Rational(3)) == Rational(7));
}

TEST_CASE("wedge")
{
    CHECK(wedge(t_pow(1), dt) == t_pow_dt(1));
    CHECK(wedge(dt, dt).is_zero());
    const PolyForm one_plus_t{Polynomial({Rational(1), Rational(1)}), {}};
    const auto expected = convolve({Rational(1), Rational(1)}, {Rational(0), Rational(1)});
    CHECK(wedge(one_plus_t, t_pow_dt(1)) == PolyForm{{}, Polynomial(expected)});
}

TEST_CASE("d_form")
{
    CHECK(d_form(t_pow(2)) == PolyForm{{}, Polynomial({Rational(0), Rational(2)})});
    CHECK(d_form(dt).is_zero());
    const PolyForm x{Polynomial::monomial(3), Polynomial::monomial(1)};
    CHECK(d_form(x) == PolyForm{{}, Polynomial(power_rule({Rational(0), Rational(0), Rational(0), Rational(1)}))});
}

TEST_CASE("cup and delta")
{
    const auto f = Cochain::vertices(Rational(2), Rational(3));
    CHECK(cup(f, Cochain::edge_only(Rational(5))) == Cochain::edge_only(Rational(10)));
    // the right-hand rule r dt ∪ F = r F(1) dt
    CHECK(cup(Cochain::edge_only(Rational(5)), f) == Cochain::edge_only(Rational(15)));
    CHECK(cup(Cochain::edge_only(Rational(1)), Cochain::edge_only(Rational(1))).is_zero());
    CHECK(delta(Cochain::vertices(Rational(0), Rational(1))) == Cochain::edge_only(Rational(1)));
    CHECK(delta(Cochain::edge_only(Rational(4))).is_zero());
    CHECK(delta(Cochain::vertices(Rational(3), Rational(3))).is_zero());
}

TEST_CASE("integrate")
{
    CHECK(integrate(t_pow(2)) == Cochain::vertices(Rational(0), Rational(1)));
    CHECK(integrate(t_pow_dt(1)) == Cochain::edge_only(Rational(1, 2)));
    CHECK(integrate(t_pow(0)) == Cochain::vertices(Rational(1), Rational(1)));
    for (std::size_t k = 0; k <= 12; ++k)
        CHECK(integrate(t_pow_dt(k)).edge == Rational(1, static_cast<long>(k) + 1));
}

TEST_CASE("iterated integrals")
{
    CHECK(iterated_integral(std::vector{dt, dt}) == Cochain::edge_only(Rational(1, 2)));
    CHECK(iterated_integral(std::vector{dt, dt, dt}) == Cochain::edge_only(Rational(1, 6)));
    CHECK(iterated_integral(std::vector{t_pow(1), dt}).is_zero());
    CHECK_THROWS_AS(iterated_integral(std::vector<PolyForm>{}), std::invalid_argument);

    Rational fact(1);
    for (int n = 1; n <= 8; ++n) {
        fact *= Rational(n);
        CHECK(iterated_integral(std::vector<PolyForm>(static_cast<std::size_t>(n), dt)) ==
              Cochain::edge_only(Rational(1) / fact));
    }
    // closed-form simplex moments
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long c = 0; c <= 3; ++c) {
                const std::vector forms{t_pow_dt(static_cast<std::size_t>(a)), t_pow_dt(static_cast<std::size_t>(b)),
                                        t_pow_dt(static_cast<std::size_t>(c))};
                CHECK(iterated_integral(forms).edge == simplex_moment({a, b, c}));
            }
}

TEST_CASE("iterated integrals are multilinear")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 3;
        std::vector<PolyForm> xs;
        std::vector<PolyForm> ys;
        for (int i = 0; i < n; ++i) {
            xs.push_back(random_form(rng, 3));
            ys.push_back(random_form(rng, 3));
        }
        const Rational s = random_rational(rng);
        const int slot = trial % n;
        auto mixed = xs;
        mixed[static_cast<std::size_t>(slot)] = xs[static_cast<std::size_t>(slot)] + s * ys[static_cast<std::size_t>(slot)];
        auto other = xs;
        other[static_cast<std::size_t>(slot)] = ys[static_cast<std::size_t>(slot)];
        CHECK(iterated_integral(mixed) == iterated_integral(xs) + s * iterated_integral(other));
    }
}

TEST_CASE("dga axioms on monomials up to exponent 8")
{
    std::vector<PolyForm> basis;
    for (std::size_t k = 0; k <= 8; ++k) {
        basis.push_back(t_pow(k));
        basis.push_back(t_pow_dt(k));
    }
    for (const auto& a : basis) {
        CHECK(d_form(d_form(a)).is_zero());
        for (const auto& b : basis) {
            const int sa = a.degree() % 2 ? -1 : 1;
            CHECK(d_form(wedge(a, b)) == wedge(d_form(a), b) + Rational(sa) * wedge(a, d_form(b)));
            const int sab = (a.degree() * b.degree()) % 2 ? -1 : 1;
            CHECK(wedge(a, b) == Rational(sab) * wedge(b, a));
        }
    }
    for (std::size_t k = 0; k <= 12; ++k)
        CHECK(d_form(d_form(t_pow(k))).is_zero());
    const auto cb = cochain_basis();
    for (const auto& a : cb) {
        CHECK(delta(delta(a)).is_zero());
        for (const auto& b : cb) {
            const int sa = a.degree() % 2 ? -1 : 1;
            CHECK(delta(cup(a, b)) == cup(delta(a), b) + Rational(sa) * cup(a, delta(b)));
            for (const auto& c : cb)
                CHECK(cup(cup(a, b), c) == cup(a, cup(b, c)));
        }
    }
}

TEST_CASE("Stokes: integrate is a chain map")
{
    for (std::size_t k = 0; k <= 12; ++k) {
        CHECK(integrate(d_form(t_pow(k))) == delta(integrate(t_pow(k))));
        CHECK(integrate(d_form(t_pow_dt(k))) == delta(integrate(t_pow_dt(k))));
    }
}

TEST_CASE("text forms")
{
    CHECK(to_string(PolyForm{Polynomial::monomial(2, Rational(3, 2)), Polynomial::constant(Rational(1, 3))}) ==
          "3/2*t^2 + (1/3)dt");
    CHECK(to_string(dt) == "dt");
    CHECK(to_string(PolyForm{}) == "0");
    CHECK(to_string(Cochain{Rational(1), Rational(2), Rational(1, 2)}) == "(1, 2; 1/2 dt)");

    CHECK(parse_form("3/2*t^2 + (1/3)dt") ==
          PolyForm{Polynomial::monomial(2, Rational(3, 2)), Polynomial::constant(Rational(1, 3))});
    CHECK(parse_form("t dt") == t_pow_dt(1));
    CHECK(parse_form("dt*dt").is_zero());
    CHECK(parse_form("-(1 - t)") == PolyForm{Polynomial({Rational(-1), Rational(1)}), {}});
    const auto tuple = parse_form_tuple("t ; dt");
    REQUIRE(tuple.size() == 2);
    CHECK(tuple[0] == t_pow(1));
    CHECK(tuple[1] == dt);
    for (std::size_t k = 0; k <= 5; ++k) {
        const PolyForm x{Polynomial::monomial(k, Rational(-2, 3)), Polynomial::monomial(k + 1, Rational(5))};
        CHECK(parse_form(to_string(x)) == x);
        CHECK(form_from_json(to_json(x)) == x);
    }
    const Cochain c{Rational(-1, 2), Rational(3), Rational(7, 5)};
    CHECK(cochain_from_json(to_json(c)) == c);
    CHECK(to_json(c)["edge"] == "7/5");
}

TEST_CASE("parse errors carry positions")
{
    try {
        parse_form_tuple("t ; d");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_form("t +"), ParseError);
    CHECK_THROWS_AS(parse_form("(t"), ParseError);
    CHECK_THROWS_AS(parse_form("1/0"), ParseError);
    CHECK_THROWS_AS(parse_form("x"), ParseError);
}
