#include "bcum/cube_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcum {

namespace {

constexpr int kMaxCubeN = 20;

void check_n(int n, const char* what, int lowest = 2)
{
    if (n < lowest)
        throw std::invalid_argument(std::string(what) + ": n must be at least " + std::to_string(lowest));
    if (n > kMaxCubeN)
        throw std::invalid_argument(std::string(what) + ": n too large");
}

void check_word(int n, const CubeCell& cell)
{
    if (cell.n() != n)
        throw std::invalid_argument("cube cell '" + cell.str() + "' does not have " + std::to_string(n - 1) +
                                    " letters");
}

struct Block {
    int first = 0;  // index of the first input
    int size = 0;
    std::vector<Cut> inner;  // LOW/FREE letters inside the block
};

std::vector<Block> blocks_of(const CubeCell& cell)
{
    std::vector<Block> out(1);
    out.back().size = 1;
    for (std::size_t i = 0; i < cell.word.size(); ++i) {
        if (cell.word[i] == Cut::High) {
            out.push_back({static_cast<int>(i) + 1, 1, {}});
        } else {
            out.back().inner.push_back(cell.word[i]);
            ++out.back().size;
        }
    }
    return out;
}

int free_count(const std::vector<Cut>& letters)
{
    return static_cast<int>(std::count(letters.begin(), letters.end(), Cut::Free));
}

MultiMap block_map(const Block& b)
{
    const int f = free_count(b.inner);
    MultiMap m = unshifted_component(f + 1);
    // Expand LOW cuts right to left: the group left of a LOW cut sits at the
    // slot given by the number of FREE cuts before it.
    for (std::size_t j = b.inner.size(); j-- > 0;) {
        if (b.inner[j] != Cut::Low)
            continue;
        const auto before = std::count(b.inner.begin(), b.inner.begin() + static_cast<std::ptrdiff_t>(j), Cut::Free);
        m = precompose_product(m, static_cast<int>(before));
    }
    return m;
}

}  // namespace

int CubeCell::dimension() const
{
    return free_count(word);
}

std::string CubeCell::str() const
{
    std::string s;
    for (Cut c : word)
        s += c == Cut::Low ? 'L' : c == Cut::High ? 'H' : 'F';
    return s;
}

CubeCell CubeCell::parse(std::string_view letters)
{
    CubeCell cell;
    for (char c : letters) {
        switch (c) {
        case 'L': cell.word.push_back(Cut::Low); break;
        case 'H': cell.word.push_back(Cut::High); break;
        case 'F': cell.word.push_back(Cut::Free); break;
        default: throw std::invalid_argument("cube cell: unexpected letter '" + std::string(1, c) + "'");
        }
    }
    return cell;
}

CubeCell CubeCell::vertex(const Composition& c)
{
    CubeCell cell;
    cell.word.assign(static_cast<std::size_t>(c.n() - 1), Cut::Low);
    for (int cut : c.cuts())
        cell.word[static_cast<std::size_t>(cut - 1)] = Cut::High;
    return cell;
}

std::string CellLabel::str() const
{
    std::string s;
    for (int p : p_indices)
        s += "p" + std::to_string(p);
    return s;
}

CellLabel cell_label(const CubeCell& cell)
{
    CellLabel label;
    for (const auto& b : blocks_of(cell)) {
        label.block_pattern.blocks.push_back(b.size);
        label.p_indices.push_back(1 + free_count(b.inner));
    }
    return label;
}

std::string cell_expression(const CubeCell& cell)
{
    std::string out;
    for (const auto& b : blocks_of(cell)) {
        out += "p" + std::to_string(1 + free_count(b.inner)) + "(" + input_name(b.first);
        for (std::size_t j = 0; j < b.inner.size(); ++j) {
            if (b.inner[j] == Cut::Free)
                out += ",";
            out += input_name(b.first + static_cast<int>(j) + 1);
        }
        out += ")";
    }
    return out;
}

Graph cumulant_graph(int n)
{
    check_n(n, "cumulant_graph");
    const auto comps = compositions(n);
    Graph g;
    for (const auto& c : comps)
        g.vertex_labels.push_back(c.str());
    // brute force over pairs: coarse -> fine by splitting one block
    auto split_at = [](const Composition& coarse, const Composition& fine) -> int {
        if (fine.blocks.size() != coarse.blocks.size() + 1)
            return -1;
        for (std::size_t k = 0; k < coarse.blocks.size(); ++k) {
            Composition merged = fine;
            merged.blocks[k] += merged.blocks[k + 1];
            merged.blocks.erase(merged.blocks.begin() + static_cast<std::ptrdiff_t>(k) + 1);
            if (merged == coarse) {
                int pos = 0;
                for (std::size_t j = 0; j <= k; ++j)
                    pos += fine.blocks[j];
                return pos;
            }
        }
        return -1;
    };
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = 0; j < comps.size(); ++j) {
            const int cut = split_at(comps[i], comps[j]);
            if (cut < 0)
                continue;
            CubeCell edge = CubeCell::vertex(comps[i]);
            edge.word[static_cast<std::size_t>(cut - 1)] = Cut::Free;
            g.edges.emplace_back(static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j)));
            g.edge_labels.push_back(cell_expression(edge));
        }
    }
    return g;
}

HypercubeIsomorphism hypercube_isomorphism(int n)
{
    const Graph g = cumulant_graph(n);
    const auto comps = compositions(n);
    HypercubeIsomorphism iso;
    iso.n = n;
    for (const auto& c : comps) {
        unsigned long mask = 0;
        for (int cut : c.cuts())
            mask |= 1UL << (cut - 1);
        iso.cut_mask.push_back(mask);
    }
    const unsigned long cube_size = 1UL << (n - 1);
    std::vector<int> owner(cube_size, -1);
    iso.bijective = comps.size() == cube_size;
    for (std::size_t v = 0; v < comps.size() && iso.bijective; ++v) {
        const auto m = iso.cut_mask[v];
        if (m >= cube_size || owner[m] >= 0)
            iso.bijective = false;
        else
            owner[m] = static_cast<int>(v);
    }
    if (!iso.bijective)
        return iso;
    std::vector<std::pair<int, int>> expected;
    for (unsigned long m = 0; m < cube_size; ++m)
        for (int bit = 0; bit < n - 1; ++bit)
            if (!(m & (1UL << bit))) {
                const int a = owner[m];
                const int b = owner[m | (1UL << bit)];
                expected.emplace_back(std::min(a, b), std::max(a, b));
            }
    auto actual = g.edges;
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    iso.edges_are_flips = expected == actual;
    return iso;
}

std::vector<CubeCell> all_cells(int n)
{
    check_n(n, "all_cells", 1);
    if (n > 14)
        throw std::invalid_argument("all_cells: n too large to enumerate");
    const int len = n - 1;
    long total = 1;
    for (int i = 0; i < len; ++i)
        total *= 3;
    std::vector<CubeCell> cells;
    cells.reserve(static_cast<std::size_t>(total));
    for (long code = 0; code < total; ++code) {
        CubeCell c;
        c.word.resize(static_cast<std::size_t>(len));
        long x = code;
        for (int i = len; i-- > 0;) {
            c.word[static_cast<std::size_t>(i)] = static_cast<Cut>(x % 3);
            x /= 3;
        }
        cells.push_back(std::move(c));
    }
    std::stable_sort(cells.begin(), cells.end(), [](const CubeCell& a, const CubeCell& b) {
        return a.dimension() < b.dimension();
    });
    return cells;
}

std::vector<CubeCell> cells_of_dimension(int n, int dim)
{
    std::vector<CubeCell> out;
    for (auto& c : all_cells(n))
        if (c.dimension() == dim)
            out.push_back(std::move(c));
    return out;
}

MultiMap cell_to_map(int n, const CubeCell& cell, SignConvention conv)
{
    check_n(n, "cell_to_map", 1);
    check_word(n, cell);
    const auto blocks = blocks_of(cell);
    MultiMap m = block_map(blocks.front());
    for (std::size_t i = 1; i < blocks.size(); ++i)
        m = cup_maps(m, block_map(blocks[i]), conv);
    return m.renamed(cell_expression(cell));
}

std::vector<SignedCell> cell_boundary(const CubeCell& cell)
{
    if (cell.dimension() == 0)
        throw std::invalid_argument("cell_boundary: '" + cell.str() + "' is a vertex");
    std::vector<SignedCell> out;
    int rank = 0;
    for (std::size_t i = 0; i < cell.word.size(); ++i) {
        if (cell.word[i] != Cut::Free)
            continue;
        const int sign = parity_sign(rank++);
        CubeCell low = cell;
        low.word[i] = Cut::Low;
        CubeCell high = cell;
        high.word[i] = Cut::High;
        out.push_back({sign, std::move(low)});
        out.push_back({-sign, std::move(high)});
    }
    return out;
}

std::map<CubeCell, int> collect(const std::vector<SignedCell>& cells)
{
    std::map<CubeCell, int> sum;
    for (const auto& sc : cells)
        if ((sum[sc.cell] += sc.sign) == 0)
            sum.erase(sc.cell);
    return sum;
}

Verdict verify_cell(int n, const CubeCell& cell, int D, SignConvention conv)
{
    const MultiMap lhs = hom_boundary(cell_to_map(n, cell, conv), conv);
    MultiMap rhs = MultiMap::zero(n, lhs.shifted_degree());
    for (const auto& facet : cell_boundary(cell)) {
        const MultiMap fm = cell_to_map(n, facet.cell, conv);
        rhs = facet.sign > 0 ? rhs + fm : rhs - fm;
    }
    return maps_equal_on_truncation(lhs, rhs, TruncationGrid{D}, "verify_cell " + cell.str());
}

SquareType square_type(const CubeCell& cell)
{
    if (cell.dimension() != 2)
        throw std::invalid_argument("square_type: '" + cell.str() + "' is not a 2-cell");
    for (int p : cell_label(cell).p_indices)
        if (p == 3)
            return SquareType::SingleBlock;
    return SquareType::TwoBlocks;
}

MultiMap vertex_sum(int n, SignConvention conv)
{
    MultiMap total = MultiMap::zero(n, n - 1);
    for (const auto& c : compositions(n)) {
        const MultiMap v = cell_to_map(n, CubeCell::vertex(c), conv);
        total = composition_sign(c) > 0 ? total + v : total - v;
    }
    return total.renamed("vertex sum of g" + std::to_string(n));
}

std::vector<long> cells_by_dimension(int n)
{
    std::vector<long> counts(static_cast<std::size_t>(n), 0);
    for (const auto& c : all_cells(n))
        ++counts[static_cast<std::size_t>(c.dimension())];
    return counts;
}

long euler_characteristic(int n)
{
    long chi = 0;
    const auto counts = cells_by_dimension(n);
    for (std::size_t k = 0; k < counts.size(); ++k)
        chi += parity_sign(static_cast<long>(k)) * counts[k];
    return chi;
}

}  // namespace bcum
