#include "bcum/formal_ainfty.hpp"

#include <doctest.h>

#include <set>

using namespace bcum;

namespace {

constexpr auto A = SignConvention::KoszulLeft;
constexpr auto B = SignConvention::KoszulRight;

const Generator m2s{GenKind::MSource, 2};
const Generator m2t{GenKind::MTarget, 2};
FormalTree leaf() { return FormalTree::leaf(); }
FormalTree p(int k) { return FormalTree::p(k); }

long catalan_rec(int n)
{
    std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j)
            c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - 1 - j)];
    return c[static_cast<std::size_t>(n)];
}

// painted trees: a target binary tree on k blocks, each block a source
// binary tree; counted by summing over compositions
long painted_count(int n)
{
    std::vector<std::vector<long>> f(static_cast<std::size_t>(n) + 1, std::vector<long>(static_cast<std::size_t>(n) + 1, 0));
    f[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= i; ++k)
            for (int b = 1; b <= i; ++b)
                f[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
                    f[static_cast<std::size_t>(i - b)][static_cast<std::size_t>(k - 1)] * catalan_rec(b - 1);
    long total = 0;
    for (int k = 1; k <= n; ++k)
        total += f[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] * catalan_rec(k - 1);
    return total;
}

}  // namespace

TEST_CASE("trees")
{
    const auto t = FormalTree::node(p(2).generator(), {FormalTree::node(m2s, {leaf(), leaf()}), leaf()});
    CHECK(t.leaf_count() == 3);
    CHECK(t.shifted_degree() == 1);
    CHECK(t.cell_dimension() == 1);
    CHECK(t.is_well_typed());
    CHECK(t.str() == "p2(m2⊗1)");
    CHECK(t.expression() == "p2(ab,c)");
    CHECK(p(3).str() == "p3");
    CHECK(p(3).cell_dimension() == 2);
    CHECK_THROWS_AS(FormalTree::node(m2s, {leaf()}), std::invalid_argument);

    const auto bad = FormalTree::node(m2t, {leaf(), leaf()});
    CHECK_FALSE(bad.is_well_typed());
    CHECK_THROWS_AS(formal_boundary(FormalSum(bad), A), std::invalid_argument);

    const auto u = FormalTree::node(m2t, {p(1), p(2)});
    CHECK(u.str() == "m2(p1⊗p2)");
    CHECK(u.expression() == "p1(a)p2(b,c)");
}

TEST_CASE("formal sums")
{
    FormalSum s;
    s.add(p(2), Rational(1));
    s.add(p(2), Rational(-1));
    CHECK(s.empty());
    s.add(p(3), Rational(2));
    CHECK(s.coefficient(p(3)) == Rational(2));
    CHECK((s - s).empty());
    CHECK((Rational(1, 2) * s).coefficient(p(3)) == Rational(1));
    CHECK(s.str() == "+ 2 p3\n");
}

TEST_CASE("boundaries of the generators")
{
    // ∂p1 has no terms, ∂p2 = p1(m2) - m2(p1⊗p1)
    CHECK(formal_boundary(FormalSum(p(1)), A).empty());
    const auto d2 = formal_boundary(FormalSum(p(2)), A);
    CHECK(d2.size() == 2);
    CHECK(d2.coefficient(FormalTree::node(p(1).generator(), {FormalTree::node(m2s, {leaf(), leaf()})})) == Rational(1));
    CHECK(d2.coefficient(FormalTree::node(m2t, {p(1), p(1)})) == Rational(-1));

    // the hexagon
    const auto d3 = formal_boundary(FormalSum(p(3)), A);
    CHECK(d3.size() == 6);
    for (const auto& [tree, c] : d3.terms()) {
        CHECK((c == Rational(1) || c == Rational(-1)));
        CHECK(tree.cell_dimension() == 1);
    }
}

TEST_CASE("formal ∂² = 0")
{
    for (auto conv : {A, B})
        for (int n = 1; n <= 5; ++n) {
            const auto v = check_d_squared(n, conv);
            CHECK_MESSAGE(v.passed, v.residue.str());
        }
    CHECK_THROWS(check_d_squared(6, A));
}

TEST_CASE("enumeration counts")
{
    for (int n = 1; n <= 8; ++n)
        CHECK(static_cast<long>(binary_trees(n).size()) == catalan_rec(n - 1));
    CHECK(binary_trees(4).size() == 5);
    for (int n = 1; n <= 5; ++n) {
        CHECK(static_cast<long>(painted_trees(n).size()) == painted_count(n));
        CHECK(painted_cells(n, 0).size() == painted_trees(n).size());
    }
    CHECK(painted_trees(3).size() == 6);
    for (const auto& t : painted_cells(4, 2)) {
        CHECK(t.is_well_typed());
        CHECK(t.leaf_count() == 4);
    }
}

TEST_CASE("polytope graphs and contractibility")
{
    const auto hex = cumulant_polytope_graph(3, A);
    CHECK(hex.graph.vertex_count() == 6);
    CHECK(hex.graph.edge_count() == 6);
    CHECK(hex.graph.regular_degree() == 2);
    CHECK(hex.graph.is_connected());
    CHECK_THROWS(cumulant_polytope_graph(5, A));

    const int expected[][4] = {{1, 0, 0, 0}, {2, 1, 0, 0}, {6, 6, 1, 1}, {21, 32, 13, 12}};
    for (int n = 1; n <= 4; ++n) {
        const auto r = associahedron_contractibility(n, A);
        CHECK(r.holds());
        CHECK(r.vertices == expected[n - 1][0]);
        CHECK(r.edges == expected[n - 1][1]);
        CHECK(r.faces == expected[n - 1][2]);
        CHECK(r.cycle_rank == expected[n - 1][3]);
        CHECK(r.vertices - r.edges + r.faces >= 1);
    }
    CHECK(rational_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
    CHECK(rational_rank({}) == 0);
}

TEST_CASE("associative specialization lands on the cube")
{
    const auto s = specialize_associative(formal_boundary(FormalSum(p(3)), A));
    std::set<std::string> words;
    for (const auto& [tree, c] : s.terms())
        words.insert(to_cube_word(tree).str());
    CHECK(words == std::set<std::string>{"HF", "FH", "FL", "LF"});

    // same facets as the top cube cell
    for (int n = 2; n <= 4; ++n) {
        const auto top = p(n);
        const auto assoc = specialize_associative(formal_boundary(FormalSum(top), A));
        std::map<CubeCell, int> formal;
        for (const auto& [tree, c] : assoc.terms())
            formal[to_cube_word(tree)] += c == Rational(1) ? 1 : -1;
        const auto cube = collect(cell_boundary(to_cube_word(top)));
        std::set<CubeCell> a;
        std::set<CubeCell> b;
        for (const auto& [c, k] : formal)
            if (k != 0)
                a.insert(c);
        for (const auto& [c, k] : cube)
            b.insert(c);
        CHECK(a == b);
    }
}

TEST_CASE("formal and concrete agree")
{
    const TruncationGrid grid{2};
    for (int n = 1; n <= 4; ++n) {
        const auto lhs = interpret(formal_boundary(FormalSum(p(n)), A), n, 1, A);
        const auto rhs = hom_boundary(iterated_integral_map(n), A);
        CHECK(maps_equal_on_truncation(lhs, rhs, grid).equal);
    }
    const auto lhs = interpret(formal_boundary(FormalSum(p(2)), B), 2, 1, B);
    CHECK_FALSE(maps_equal_on_truncation(lhs, hom_boundary(iterated_integral_map(2), B), grid).equal);
}
