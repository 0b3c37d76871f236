#include "bcum/formal_ainfty.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace bcum {

// ---- trees --------------------------------------------------------------------

std::string Generator::str() const
{
    return (kind == GenKind::P ? "p" : "m") + std::to_string(arity);
}

FormalTree FormalTree::node(Generator g, std::vector<FormalTree> children)
{
    if (g.arity < 1)
        throw std::invalid_argument("FormalTree: generator arity must be positive");
    if (static_cast<int>(children.size()) != g.arity)
        throw std::invalid_argument("FormalTree: " + g.str() + " needs " + std::to_string(g.arity) + " children");
    FormalTree t;
    t.gen_ = g;
    t.children_ = std::move(children);
    return t;
}

FormalTree FormalTree::p(int k)
{
    return node({GenKind::P, k}, std::vector<FormalTree>(static_cast<std::size_t>(k), leaf()));
}

int FormalTree::leaf_count() const
{
    if (is_leaf())
        return 1;
    int n = 0;
    for (const auto& c : children_)
        n += c.leaf_count();
    return n;
}

int FormalTree::shifted_degree() const
{
    if (is_leaf())
        return 0;
    int d = gen_->shifted_degree();
    for (const auto& c : children_)
        d += c.shifted_degree();
    return d;
}

int FormalTree::cell_dimension() const
{
    if (is_leaf())
        return 0;
    int d = gen_->kind == GenKind::P ? gen_->arity - 1 : gen_->arity - 2;
    for (const auto& c : children_)
        d += c.cell_dimension();
    return d;
}

bool FormalTree::is_binary() const
{
    if (is_leaf())
        return true;
    if (gen_->kind != GenKind::P && gen_->arity > 2)
        return false;
    return std::all_of(children_.begin(), children_.end(), [](const FormalTree& c) { return c.is_binary(); });
}

namespace {

bool typed(const FormalTree& t, bool above_paint)
{
    if (t.is_leaf())
        return !above_paint;
    const auto kind = t.generator().kind;
    bool children_above = above_paint;
    if (above_paint) {
        if (kind == GenKind::MSource)
            return false;
        if (kind == GenKind::P)
            children_above = false;
    } else if (kind != GenKind::MSource) {
        return false;
    }
    for (const auto& c : t.children())
        if (!typed(c, children_above))
            return false;
    return true;
}

}  // namespace

bool FormalTree::is_well_typed() const
{
    return typed(*this, true);
}

std::string FormalTree::str() const
{
    if (is_leaf())
        return "1";
    if (std::all_of(children_.begin(), children_.end(), [](const FormalTree& c) { return c.is_leaf(); }))
        return gen_->str();
    std::string s = gen_->str() + "(";
    for (std::size_t i = 0; i < children_.size(); ++i)
        s += (i ? "⊗" : "") + children_[i].str();
    return s + ")";
}

namespace {

// Products of a source or target m2 are written by juxtaposition; nested
// products get parentheses.
std::string expr(const FormalTree& t, int& next_input, bool nested)
{
    if (t.is_leaf())
        return input_name(next_input++);
    const auto& g = t.generator();
    if (g.kind != GenKind::P && g.arity == 2) {
        std::string s = expr(t.children()[0], next_input, true);
        s += expr(t.children()[1], next_input, true);
        return nested ? "(" + s + ")" : s;
    }
    std::string s = g.str() + "(";
    for (std::size_t i = 0; i < t.children().size(); ++i)
        s += (i ? "," : "") + expr(t.children()[i], next_input, false);
    return s + ")";
}

}  // namespace

std::string FormalTree::expression() const
{
    int next = 0;
    return expr(*this, next, false);
}

bool operator==(const FormalTree& a, const FormalTree& b)
{
    return a.gen_ == b.gen_ && a.children_ == b.children_;
}

std::strong_ordering operator<=>(const FormalTree& a, const FormalTree& b)
{
    if (a.is_leaf() || b.is_leaf())
        return b.is_leaf() <=> a.is_leaf();  // leaves first
    if (auto c = *a.gen_ <=> *b.gen_; c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.children_.begin(), a.children_.end(), b.children_.begin(),
                                                  b.children_.end());
}

// ---- sums ---------------------------------------------------------------------

void FormalSum::add(const FormalTree& t, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational FormalSum::coefficient(const FormalTree& t) const
{
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& o)
{
    for (const auto& [t, c] : o.terms_)
        add(t, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o)
{
    for (const auto& [t, c] : o.terms_)
        add(t, -c);
    return *this;
}

FormalSum operator*(const Rational& s, const FormalSum& a)
{
    FormalSum out;
    for (const auto& [t, c] : a.terms_)
        out.add(t, s * c);
    return out;
}

std::string FormalSum::str() const
{
    std::string out;
    for (const auto& [t, c] : terms_) {
        out += c.sign() < 0 ? "- " : "+ ";
        const Rational mag = c.sign() < 0 ? -c : c;
        if (mag != Rational(1))
            out += mag.str() + " ";
        out += t.str() + "\n";
    }
    return out;
}

// ---- boundary -------------------------------------------------------------------

namespace {

std::vector<FormalTree> leaves(int k)
{
    return std::vector<FormalTree>(static_cast<std::size_t>(k), FormalTree::leaf());
}

// outer_i(1^r ⊗ inner_j ⊗ 1^t)
FormalTree insertion(Generator outer, int r, Generator inner)
{
    auto kids = leaves(outer.arity);
    kids[static_cast<std::size_t>(r)] = FormalTree::node(inner, leaves(inner.arity));
    return FormalTree::node(outer, std::move(kids));
}

// ∂ of a single generator as a sum of trees whose leaves are its inputs.
FormalSum generator_boundary(Generator g)
{
    FormalSum out;
    const int n = g.arity;
    if (g.kind == GenKind::P) {
        for (int k = 2; k <= n; ++k)
            for (int r = 0; r + k <= n; ++r)
                out.add(insertion({GenKind::P, n - k + 1}, r, {GenKind::MSource, k}), Rational(1));
        for (const auto& comp : compositions(n)) {
            if (comp.block_count() < 2)
                continue;
            std::vector<FormalTree> kids;
            for (int b : comp.blocks)
                kids.push_back(FormalTree::p(b));
            out.add(FormalTree::node({GenKind::MTarget, comp.block_count()}, std::move(kids)), Rational(-1));
        }
        return out;
    }
    for (int i = 2; i < n; ++i) {
        const int j = n + 1 - i;
        for (int r = 0; r < i; ++r)
            out.add(insertion({g.kind, i}, r, {g.kind, j}), Rational(-1));
    }
    return out;
}

int input_parity(const std::vector<FormalTree>& cs, std::size_t lo, std::size_t hi)
{
    int s = 0;
    for (std::size_t i = lo; i < hi; ++i)
        s += cs[i].shifted_degree();
    return s;
}

// T ∘ (C_1 ⊗ .. ⊗ C_a) written back as a tree, with the Koszul sign of moving
// the operations of T past the C's.
std::pair<FormalTree, int> substitute(const FormalTree& t, const std::vector<FormalTree>& cs, std::size_t& next,
                                      SignConvention conv)
{
    if (t.is_leaf())
        return {cs[next++], 1};
    const std::size_t first = next;
    std::vector<std::size_t> starts;
    std::vector<FormalTree> kids;
    std::vector<int> kid_degrees;
    int sign = 1;
    for (const auto& d : t.children()) {
        starts.push_back(next);
        auto [kid, s] = substitute(d, cs, next, conv);
        sign *= s;
        kids.push_back(std::move(kid));
        kid_degrees.push_back(d.shifted_degree());
    }
    const std::size_t last = next;
    for (std::size_t j = 0; j < kids.size(); ++j) {
        const std::size_t lo = starts[j];
        const std::size_t hi = j + 1 < kids.size() ? starts[j + 1] : last;
        const int passed = conv == SignConvention::KoszulLeft ? input_parity(cs, first, lo) : input_parity(cs, hi, last);
        sign *= parity_sign(static_cast<long>(kid_degrees[j]) * passed);
    }
    return {FormalTree::node(t.generator(), std::move(kids)), sign};
}

// Apply ∂ at every node; `passed` is the degree the derivation has moved past.
void boundary_rec(const FormalTree& t, const Rational& coeff, int& passed,
                  const std::function<FormalTree(FormalTree)>& rebuild, FormalSum& out, SignConvention conv)
{
    if (t.is_leaf())
        return;
    const Rational signed_coeff = parity_sign(passed) > 0 ? coeff : -coeff;
    const FormalSum expansion = generator_boundary(t.generator());
    for (const auto& [term, c] : expansion.terms()) {
        std::size_t next = 0;
        auto [replaced, s] = substitute(term, t.children(), next, conv);
        out.add(rebuild(std::move(replaced)), Rational(s) * c * signed_coeff);
    }
    passed += t.generator().shifted_degree();
    const auto& kids = t.children();
    const std::size_t a = kids.size();
    for (std::size_t step = 0; step < a; ++step) {
        const std::size_t i = conv == SignConvention::KoszulLeft ? step : a - 1 - step;
        auto rebuild_child = [&, i](FormalTree replacement) {
            std::vector<FormalTree> copy = kids;
            copy[i] = std::move(replacement);
            return rebuild(FormalTree::node(t.generator(), std::move(copy)));
        };
        boundary_rec(kids[i], coeff, passed, rebuild_child, out, conv);
    }
}

}  // namespace

FormalSum formal_boundary(const FormalSum& s, SignConvention conv)
{
    FormalSum out;
    for (const auto& [t, c] : s.terms()) {
        if (!t.is_well_typed())
            throw std::invalid_argument("formal_boundary: ill-typed tree " + t.str());
        int passed = 0;
        boundary_rec(t, c, passed, [](FormalTree x) { return x; }, out, conv);
    }
    return out;
}

FormalVerdict check_d_squared(int n, SignConvention conv)
{
    if (n < 1 || n > 5)
        throw std::invalid_argument("check_d_squared: n must be in 1..5");
    FormalVerdict v;
    v.check = "formal_d_squared";
    v.n = n;
    v.residue = formal_boundary(formal_boundary(FormalTree::p(n), conv), conv);
    v.passed = v.residue.empty();
    return v;
}

// ---- enumeration ------------------------------------------------------------------

namespace {

std::vector<FormalTree> binary_of_kind(int n, GenKind kind)
{
    if (n < 1)
        throw std::invalid_argument("binary trees: n must be positive");
    if (n == 1)
        return {FormalTree::leaf()};
    std::vector<FormalTree> out;
    for (int left = 1; left < n; ++left)
        for (const auto& l : binary_of_kind(left, kind))
            for (const auto& r : binary_of_kind(n - left, kind))
                out.push_back(FormalTree::node({kind, 2}, {l, r}));
    return out;
}

// Replace the leaves of t, left to right, by the given trees.
FormalTree graft(const FormalTree& t, const std::vector<FormalTree>& fill, std::size_t& next)
{
    if (t.is_leaf())
        return fill[next++];
    std::vector<FormalTree> kids;
    for (const auto& c : t.children())
        kids.push_back(graft(c, fill, next));
    return FormalTree::node(t.generator(), std::move(kids));
}

// All ways to choose one tree per slot.
void product(const std::vector<std::vector<FormalTree>>& options, std::vector<FormalTree>& pick,
             const std::function<void(const std::vector<FormalTree>&)>& emit)
{
    if (pick.size() == options.size()) {
        emit(pick);
        return;
    }
    for (const auto& t : options[pick.size()]) {
        pick.push_back(t);
        product(options, pick, emit);
        pick.pop_back();
    }
}

constexpr int kMaxPaintedN = 6;

std::vector<FormalTree> source_cells(int n);
std::vector<FormalTree> target_cells(int n);

// Trees g(C_1..C_k) for every composition of n into k parts (k >= min_parts),
// children drawn from `child`.
std::vector<FormalTree> over_compositions(int n, GenKind kind, int min_parts,
                                          const std::function<std::vector<FormalTree>(int)>& child)
{
    std::vector<FormalTree> out;
    for (const auto& comp : compositions(n)) {
        if (comp.block_count() < min_parts)
            continue;
        std::vector<std::vector<FormalTree>> options;
        for (int b : comp.blocks)
            options.push_back(child(b));
        std::vector<FormalTree> pick;
        product(options, pick, [&](const std::vector<FormalTree>& kids) {
            out.push_back(FormalTree::node({kind, comp.block_count()}, kids));
        });
    }
    return out;
}

std::vector<FormalTree> source_cells(int n)
{
    if (n == 1)
        return {FormalTree::leaf()};
    return over_compositions(n, GenKind::MSource, 2, source_cells);
}

std::vector<FormalTree> target_cells(int n)
{
    auto out = over_compositions(n, GenKind::P, 1, source_cells);
    auto upper = over_compositions(n, GenKind::MTarget, 2, target_cells);
    out.insert(out.end(), upper.begin(), upper.end());
    return out;
}

}  // namespace

std::vector<FormalTree> binary_trees(int n)
{
    return binary_of_kind(n, GenKind::MSource);
}

std::vector<FormalTree> painted_trees(int n)
{
    if (n < 1)
        throw std::invalid_argument("painted_trees: n must be positive");
    if (n > kMaxPaintedN)
        throw std::invalid_argument("painted_trees: n too large");
    std::vector<FormalTree> out;
    for (const auto& comp : compositions(n)) {
        std::vector<std::vector<FormalTree>> options;
        for (int b : comp.blocks) {
            std::vector<FormalTree> painted;
            for (const auto& s : binary_trees(b))
                painted.push_back(FormalTree::node({GenKind::P, 1}, {s}));
            options.push_back(std::move(painted));
        }
        for (const auto& top : binary_of_kind(comp.block_count(), GenKind::MTarget)) {
            std::vector<FormalTree> pick;
            product(options, pick, [&](const std::vector<FormalTree>& fill) {
                std::size_t next = 0;
                out.push_back(graft(top, fill, next));
            });
        }
    }
    return out;
}

std::vector<FormalTree> painted_cells(int n, int max_dim)
{
    if (n < 1)
        throw std::invalid_argument("painted_cells: n must be positive");
    if (n > kMaxPaintedN)
        throw std::invalid_argument("painted_cells: n too large");
    std::vector<FormalTree> out;
    for (auto& t : target_cells(n))
        if (t.cell_dimension() <= max_dim)
            out.push_back(std::move(t));
    std::sort(out.begin(), out.end(), [](const FormalTree& a, const FormalTree& b) {
        const int da = a.cell_dimension();
        const int db = b.cell_dimension();
        return da != db ? da < db : a < b;
    });
    return out;
}

// ---- polytopes ------------------------------------------------------------------

PolytopeGraph cumulant_polytope_graph(int n, SignConvention conv)
{
    if (n < 2 || n > 4)
        throw std::invalid_argument("cumulant_polytope_graph: n must be in 2..4");
    PolytopeGraph pg;
    pg.vertices = painted_trees(n);
    std::map<FormalTree, int> index;
    for (const auto& v : pg.vertices) {
        index.emplace(v, pg.graph.vertex_count());
        pg.graph.vertex_labels.push_back(v.expression());
    }
    for (const auto& cell : painted_cells(n, 1)) {
        if (cell.cell_dimension() != 1)
            continue;
        const FormalSum b = formal_boundary(cell, conv);
        // shifted trees carry their own orientation, so both ends may have the same sign
        std::vector<int> ends;
        for (const auto& [t, c] : b.terms()) {
            auto it = index.find(t);
            if (it == index.end() || (c != Rational(1) && c != Rational(-1)))
                throw std::logic_error("cumulant_polytope_graph: boundary of " + cell.str() + " is not a vertex pair");
            ends.push_back(it->second);
        }
        if (ends.size() != 2)
            throw std::logic_error("cumulant_polytope_graph: boundary of " + cell.str() + " is not a vertex pair");
        pg.graph.edges.emplace_back(std::min(ends[0], ends[1]), std::max(ends[0], ends[1]));
        pg.graph.edge_labels.push_back(cell.str());
        pg.edge_cells.push_back(cell);
    }
    return pg;
}

int rational_rank(std::vector<std::vector<Rational>> rows)
{
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows.size(); ++col) {
        const auto r = static_cast<std::size_t>(rank);
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col].is_zero())
                continue;
            const Rational f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        ++rank;
    }
    return rank;
}

ContractibilityReport associahedron_contractibility(int n, SignConvention conv)
{
    if (n < 1 || n > 4)
        throw std::invalid_argument("associahedron_contractibility: n must be in 1..4");
    const auto cells = painted_cells(n, 2);
    std::vector<FormalTree> verts;
    std::map<FormalTree, std::size_t> edge_index;
    std::vector<FormalTree> faces;
    Graph g;
    std::map<FormalTree, int> vert_index;
    for (const auto& c : cells) {
        switch (c.cell_dimension()) {
        case 0:
            vert_index.emplace(c, g.vertex_count());
            g.vertex_labels.push_back(c.expression());
            break;
        case 1: edge_index.emplace(c, edge_index.size()); break;
        default: faces.push_back(c); break;
        }
    }
    ContractibilityReport rep;
    rep.n = n;
    rep.boundaries_are_edges = true;
    for (const auto& [e, i] : edge_index) {
        std::vector<int> ends;
        const FormalSum b = formal_boundary(e, conv);
        for (const auto& [t, c] : b.terms()) {
            auto it = vert_index.find(t);
            if (it == vert_index.end())
                rep.boundaries_are_edges = false;
            else
                ends.push_back(it->second);
        }
        if (ends.size() != 2) {
            rep.boundaries_are_edges = false;
            continue;
        }
        g.edges.emplace_back(ends[0], ends[1]);
    }
    std::vector<std::vector<Rational>> matrix;
    for (const auto& f : faces) {
        std::vector<Rational> row(edge_index.size(), Rational(0));
        const FormalSum b = formal_boundary(f, conv);
        for (const auto& [t, c] : b.terms()) {
            auto it = edge_index.find(t);
            if (it == edge_index.end())
                rep.boundaries_are_edges = false;
            else
                row[it->second] = c;
        }
        matrix.push_back(std::move(row));
    }
    rep.vertices = g.vertex_count();
    rep.edges = static_cast<int>(edge_index.size());
    rep.faces = static_cast<int>(faces.size());
    rep.connected = g.is_connected();
    rep.cycle_rank = g.cycle_rank();
    rep.face_boundary_rank = rational_rank(std::move(matrix));
    return rep;
}

// ---- specialization and the cube -------------------------------------------------

namespace {

bool has_higher_m(const FormalTree& t)
{
    if (t.is_leaf())
        return false;
    if (t.generator().kind != GenKind::P && t.generator().arity >= 3)
        return true;
    return std::any_of(t.children().begin(), t.children().end(), has_higher_m);
}

void cube_letters(const FormalTree& t, std::vector<Cut>& word, int& position)
{
    if (t.is_leaf()) {
        ++position;
        return;
    }
    const auto& g = t.generator();
    const auto& kids = t.children();
    for (std::size_t i = 0; i < kids.size(); ++i) {
        cube_letters(kids[i], word, position);
        if (i + 1 == kids.size())
            break;
        if (g.kind != GenKind::P && g.arity >= 3)
            throw std::invalid_argument("to_cube_word: " + t.str() + " has no cube cell");
        word[static_cast<std::size_t>(position - 1)] =
            g.kind == GenKind::MSource ? Cut::Low : g.kind == GenKind::P ? Cut::Free : Cut::High;
    }
}

}  // namespace

FormalSum specialize_associative(const FormalSum& s)
{
    FormalSum out;
    for (const auto& [t, c] : s.terms())
        if (!has_higher_m(t))
            out.add(t, c);
    return out;
}

CubeCell to_cube_word(const FormalTree& t)
{
    CubeCell cell;
    cell.word.assign(static_cast<std::size_t>(t.leaf_count() - 1), Cut::Low);
    int position = 0;
    cube_letters(t, cell.word, position);
    return cell;
}

// ---- interpretation -------------------------------------------------------------

namespace {

struct Value {
    bool is_cochain = false;
    PolyForm form;
    Cochain co;

    bool is_zero() const { return is_cochain ? co.is_zero() : form.is_zero(); }
    int degree() const { return is_cochain ? co.degree() : form.degree(); }
};

Value of(PolyForm f) { return {false, std::move(f), {}}; }
Value of(Cochain c) { return {true, {}, std::move(c)}; }

// Shifted value of the composite on (the suspensions of) inputs[lo, hi).
Value evaluate(const FormalTree& t, std::span<const PolyForm> inputs, SignConvention conv)
{
    if (t.is_leaf())
        return of(inputs.front());
    const auto& kids = t.children();
    std::vector<Value> vals;
    std::vector<std::size_t> bounds{0};
    for (const auto& k : kids)
        bounds.push_back(bounds.back() + static_cast<std::size_t>(k.leaf_count()));
    auto shifted_sum = [&](std::size_t lo, std::size_t hi) {
        int s = 0;
        for (std::size_t i = lo; i < hi; ++i)
            s += inputs[i].degree() - 1;
        return s;
    };
    int sign = 1;
    for (std::size_t i = 0; i < kids.size(); ++i) {
        Value v = evaluate(kids[i], inputs.subspan(bounds[i], bounds[i + 1] - bounds[i]), conv);
        if (v.is_zero())
            return v;
        const int passed = conv == SignConvention::KoszulLeft ? shifted_sum(0, bounds[i])
                                                              : shifted_sum(bounds[i + 1], inputs.size());
        sign *= parity_sign(static_cast<long>(kids[i].shifted_degree()) * passed);
        vals.push_back(std::move(v));
    }
    std::vector<int> degs;
    for (const auto& v : vals)
        degs.push_back(v.degree());
    const Rational s(sign * suspension_sign(conv, degs));
    const auto& g = t.generator();
    switch (g.kind) {
    case GenKind::MSource:
        if (g.arity == 1)
            return of(s * d_form(vals[0].form));
        if (g.arity == 2)
            return of(s * wedge(vals[0].form, vals[1].form));
        return of(PolyForm{});
    case GenKind::MTarget:
        if (g.arity == 1)
            return of(s * delta(vals[0].co));
        if (g.arity == 2)
            return of(s * cup(vals[0].co, vals[1].co));
        return of(Cochain{});
    case GenKind::P: {
        std::vector<PolyForm> forms;
        for (auto& v : vals)
            forms.push_back(std::move(v.form));
        return of(s * iterated_integral(forms));
    }
    }
    throw std::logic_error("evaluate: unknown generator");
}

}  // namespace

MultiMap interpret(const FormalSum& s, int arity, int shifted_degree, SignConvention conv)
{
    for (const auto& [t, c] : s.terms()) {
        if (!t.is_well_typed())
            throw std::invalid_argument("interpret: ill-typed tree " + t.str());
        if (t.leaf_count() != arity || t.shifted_degree() != shifted_degree)
            throw std::invalid_argument("interpret: term " + t.str() + " has the wrong arity or degree");
    }
    return MultiMap(
        arity, shifted_degree,
        [s, conv](std::span<const PolyForm> a) {
            Cochain total;
            for (const auto& [t, c] : s.terms()) {
                Value v = evaluate(t, a, conv);
                if (!v.is_zero())
                    total += c * v.co;
            }
            std::vector<int> degs;
            for (const auto& x : a)
                degs.push_back(x.degree());
            return Rational(suspension_sign(conv, degs)) * total;
        },
        "formal sum");
}

MultiMap interpret(const FormalSum& s, SignConvention conv)
{
    if (s.empty())
        throw std::invalid_argument("interpret: empty sum needs an explicit arity");
    const auto& first = s.terms().begin()->first;
    return interpret(s, first.leaf_count(), first.shifted_degree(), conv);
}

}  // namespace bcum
