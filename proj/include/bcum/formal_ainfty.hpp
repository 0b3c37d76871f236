#pragma once

// Formal composites of the operations m_k of two A∞ algebras and the
// components p_k of a morphism between them, as planar trees, with the
// boundary induced by the A∞ equations.
//
// Degrees are shifted: every m_k has degree 1 and every p_k degree 0. A tree
// g(C_1, .., C_a) stands for the composite g ∘ (C_1 ⊗ .. ⊗ C_a).

#include "bcum/cube_complex.hpp"
#include "bcum/graph.hpp"
#include "bcum/hom_complex.hpp"
#include "bcum/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bcum {

enum class GenKind { MSource, MTarget, P };

struct Generator {
    GenKind kind;
    int arity;

    int shifted_degree() const { return kind == GenKind::P ? 0 : 1; }
    /// "m2", "p3"
    std::string str() const;

    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

class FormalTree {
public:
    static FormalTree leaf() { return {}; }
    /// Throws std::invalid_argument if the child count differs from the arity.
    static FormalTree node(Generator g, std::vector<FormalTree> children);
    /// p_k applied directly to k inputs.
    static FormalTree p(int k);

    bool is_leaf() const { return !gen_; }
    const Generator& generator() const { return *gen_; }
    const std::vector<FormalTree>& children() const { return children_; }

    int leaf_count() const;
    /// Number of m nodes.
    int shifted_degree() const;
    /// Sum over m nodes of (arity - 2) plus sum over p nodes of (arity - 1).
    int cell_dimension() const;
    /// Every m node has arity 2 or less.
    bool is_binary() const;

    /// Paint-line typing: every leaf-to-root path meets exactly one p node,
    /// source operations sit below it and target operations above.
    bool is_well_typed() const;

    /// Operator notation: leaves print as 1 and a node over leaves only as its
    /// generator, so "m2(p1⊗p2)", "p2(m2⊗1)", "p3".
    std::string str() const;
    /// Input notation: "p2(ab,c)", "p1(a)p2(b,c)", "m3(p1(a),p1(b),p1(c))".
    std::string expression() const;

    friend bool operator==(const FormalTree& a, const FormalTree& b);
    friend std::strong_ordering operator<=>(const FormalTree& a, const FormalTree& b);

private:
    std::optional<Generator> gen_;
    std::vector<FormalTree> children_;
};

class FormalSum {
public:
    FormalSum() = default;
    FormalSum(const FormalTree& t) { add(t, Rational(1)); }

    void add(const FormalTree& t, const Rational& c);
    const std::map<FormalTree, Rational>& terms() const& { return terms_; }
    // by value on temporaries, so `for (.. : f().terms())` stays valid
    std::map<FormalTree, Rational> terms() && { return std::move(terms_); }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    Rational coefficient(const FormalTree& t) const;

    FormalSum& operator+=(const FormalSum& o);
    FormalSum& operator-=(const FormalSum& o);
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(const Rational& s, const FormalSum& a);
    friend bool operator==(const FormalSum&, const FormalSum&) = default;

    /// One term per line: "+ p2(m2⊗1)", "- 1/2 m2(p1⊗p1)".
    std::string str() const;

private:
    std::map<FormalTree, Rational> terms_;
};

/// The derivation determined by
///   ∂p_n = sum_{k>=2} p_{n-k+1}(1^r ⊗ m_k ⊗ 1^t) - sum_{k>=2} m_k(p_{n_1} ⊗ .. ⊗ p_{n_k}),
///   ∂m_n = - sum_{i,j>=2} m_i(1^r ⊗ m_j ⊗ 1^t),
/// with Koszul signs of the convention. Throws std::invalid_argument on an
/// ill-typed tree.
FormalSum formal_boundary(const FormalSum& s, SignConvention conv);

struct FormalVerdict {
    std::string check;
    int n = 0;
    bool passed = false;
    FormalSum residue;  // what failed to cancel
};

/// ∂∂ p_n = 0. Throws for n < 1 or n > 5.
FormalVerdict check_d_squared(int n, SignConvention conv);

/// Full binary planar trees on n leaves built from source m2 nodes; Catalan(n-1) of them.
std::vector<FormalTree> binary_trees(int n);
/// Vertices of the level-n cumulant polytope: binary trees of target m2
/// over p1 nodes over binary trees of source m2.
std::vector<FormalTree> painted_trees(int n);
/// Every well-typed tree on n leaves whose m nodes have arity >= 2, of cell
/// dimension <= max_dim, ordered by dimension then tree order.
std::vector<FormalTree> painted_cells(int n, int max_dim);

struct PolytopeGraph {
    Graph graph;
    std::vector<FormalTree> vertices;
    std::vector<FormalTree> edge_cells;  // parallel to graph.edges
};

/// Vertices painted_trees(n); one edge per 1-cell, joining the two vertices of
/// its boundary. Throws unless 2 <= n <= 4.
PolytopeGraph cumulant_polytope_graph(int n, SignConvention conv);

struct ContractibilityReport {
    int n = 0;
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    bool connected = false;
    int cycle_rank = 0;
    int face_boundary_rank = 0;
    bool boundaries_are_edges = false;  // every face boundary lies in the edge set
    bool holds() const { return connected && boundaries_are_edges && cycle_rank == face_boundary_rank; }
};

/// Rank over Q by Gaussian elimination.
int rational_rank(std::vector<std::vector<Rational>> rows);

/// Throws unless 1 <= n <= 4.
ContractibilityReport associahedron_contractibility(int n, SignConvention conv);

/// Drops every term containing an m node of arity >= 3.
FormalSum specialize_associative(const FormalSum& s);

/// Cube word of a tree: the cut between leaves i and i+1 takes the kind of
/// their lowest common ancestor (source m -> LOW, p -> FREE, target m -> HIGH).
/// Throws if that ancestor is an m node of arity >= 3.
CubeCell to_cube_word(const FormalTree& t);

/// Interpretation in the interval model: source m1, m2 -> d, wedge; target
/// m1, m2 -> delta, cup; p_k -> I_k; m_k = 0 for k >= 3. Every term must have
/// the same arity; an empty sum needs the arity and degree passed in.
MultiMap interpret(const FormalSum& s, SignConvention conv);
MultiMap interpret(const FormalSum& s, int arity, int shifted_degree, SignConvention conv);

}  // namespace bcum
