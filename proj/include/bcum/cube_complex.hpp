#pragma once

// The graph G_n on compositions of n and the solid cube g_n built on it.
//
// A cell of g_n is a word over {LOW, HIGH, FREE} with one letter per cut
// position (between inputs i and i+1). HIGH separates blocks, LOW multiplies
// the neighbouring inputs with wedge, FREE is a free coordinate of the cell.
// Vertices carry no FREE letter and are exactly the cumulant terms.

#include "bcum/cumulants.hpp"
#include "bcum/graph.hpp"
#include "bcum/hom_complex.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace bcum {

enum class Cut { Low, High, Free };

struct CubeCell {
    std::vector<Cut> word;

    int n() const { return static_cast<int>(word.size()) + 1; }
    int dimension() const;
    /// Letters L/H/F, e.g. "FH".
    std::string str() const;
    /// Accepts the str() form; throws std::invalid_argument on other letters.
    static CubeCell parse(std::string_view letters);
    /// The vertex with HIGH exactly at the cuts of c.
    static CubeCell vertex(const Composition& c);

    friend bool operator==(const CubeCell&, const CubeCell&) = default;
    friend auto operator<=>(const CubeCell&, const CubeCell&) = default;
};

struct CellLabel {
    Composition block_pattern;   // blocks between HIGH cuts
    std::vector<int> p_indices;  // 1 + FREE cuts per block

    /// "p2p1"
    std::string str() const;
};

CellLabel cell_label(const CubeCell& cell);
/// The composite in input notation: "p2(a,bc)", "p2(a,b)p1(c)".
std::string cell_expression(const CubeCell& cell);

/// Vertices are compositions(n) in that order; an edge joins two compositions
/// when one arises from the other by splitting a single block. Edge labels are
/// the p2-bearing composites of the cell between them. Throws for n < 2.
Graph cumulant_graph(int n);

struct HypercubeIsomorphism {
    int n = 0;
    /// Cut set of each vertex of cumulant_graph(n) as a bitmask (cut i is bit i-1).
    std::vector<unsigned long> cut_mask;
    bool bijective = false;
    /// Every graph edge is a single-coordinate flip and every flip is an edge.
    bool edges_are_flips = false;

    bool holds() const { return bijective && edges_are_flips; }
};

HypercubeIsomorphism hypercube_isomorphism(int n);

/// Every cell of g_n (3^{n-1} words), ordered by dimension and then by word.
/// g_1 is the single vertex with the empty word.
std::vector<CubeCell> all_cells(int n);
std::vector<CubeCell> cells_of_dimension(int n, int dim);

/// Composite map of a cell. Each block uses the n-th component in the
/// unshifted normalization (unshifted_component), so the block map of a
/// single-block cell with f FREE cuts is (-1)^{f(f-1)/2} I_{f+1}; blocks are
/// joined with cup_maps, left-nested. Throws on a word of the wrong length.
MultiMap cell_to_map(int n, const CubeCell& cell, SignConvention conv);

struct SignedCell {
    int sign;
    CubeCell cell;

    friend bool operator==(const SignedCell&, const SignedCell&) = default;
};

/// The 2*dim facets. Specializing the FREE letter of rank r (counted from the
/// left, 0-based) to LOW gives sign (-1)^r, to HIGH gives -(-1)^r. Throws on
/// vertices.
std::vector<SignedCell> cell_boundary(const CubeCell& cell);

/// Formal sum of signed cells with zero coefficients removed.
std::map<CubeCell, int> collect(const std::vector<SignedCell>& cells);

/// hom_boundary(cell_to_map(cell)) against the signed sum of its facet maps.
Verdict verify_cell(int n, const CubeCell& cell, int D, SignConvention conv);

/// The two kinds of 2-cell: both FREE cuts in one block (a p3 square) or in
/// two different blocks (a product of two p2 homotopies).
enum class SquareType { SingleBlock, TwoBlocks };
SquareType square_type(const CubeCell& cell);

/// Signed sum of the vertex maps of g_n; equals K_n.
MultiMap vertex_sum(int n, SignConvention conv);

/// Alternating sum of the enumerated cell counts.
long euler_characteristic(int n);
/// Cell counts by dimension from enumeration.
std::vector<long> cells_by_dimension(int n);

}  // namespace bcum
