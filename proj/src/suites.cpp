#include "bcum/suites.hpp"

#include "bcum/cube_complex.hpp"
#include "bcum/cumulants.hpp"
#include "bcum/formal_ainfty.hpp"
#include "bcum/text_io.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace bcum {

using nlohmann::json;

// ---- report ---------------------------------------------------------------------

json ReportEntry::to_json() const
{
    json params = json::object();
    for (const auto& [k, v] : parameters)
        params[k] = v;
    json j{{"check", check}, {"parameters", params}, {"status", passed ? "pass" : "fail"}, {"duration_ms", duration_ms}};
    if (witness)
        j["witness"] = *witness;
    return j;
}

bool Report::all_passed() const
{
    return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return e.passed; });
}

namespace {

int compare_values(const std::string& a, const std::string& b)
{
    auto numeric = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
               s.size() < 10;
    };
    if (numeric(a) && numeric(b)) {
        const long x = std::stol(a);
        const long y = std::stol(b);
        return x < y ? -1 : x > y;
    }
    return a.compare(b) < 0 ? -1 : a != b;
}

}  // namespace

void Report::sort()
{
    std::stable_sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
        if (a.check != b.check)
            return a.check < b.check;
        const std::size_t n = std::min(a.parameters.size(), b.parameters.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.parameters[i].first != b.parameters[i].first)
                return a.parameters[i].first < b.parameters[i].first;
            if (int c = compare_values(a.parameters[i].second, b.parameters[i].second))
                return c < 0;
        }
        return a.parameters.size() < b.parameters.size();
    });
}

json Report::to_json() const
{
    json arr = json::array();
    for (const auto& e : entries)
        arr.push_back(e.to_json());
    return {{"version", std::string(kVersion)}, {"convention", std::string(convention_name(convention))},
            {"entries", arr}};
}

Suite parse_suite(std::string_view name)
{
    if (name == "dga")
        return Suite::Dga;
    if (name == "chain-map")
        return Suite::ChainMap;
    if (name == "cumulants")
        return Suite::Cumulants;
    if (name == "ainfty")
        return Suite::Ainfty;
    if (name == "cube")
        return Suite::Cube;
    if (name == "formal")
        return Suite::Formal;
    if (name == "all")
        return Suite::All;
    throw UsageError("unknown suite '" + std::string(name) +
                     "' (expected dga, chain-map, cumulants, ainfty, cube, formal or all)");
}

std::string_view suite_name(Suite s)
{
    switch (s) {
    case Suite::Dga: return "dga";
    case Suite::ChainMap: return "chain-map";
    case Suite::Cumulants: return "cumulants";
    case Suite::Ainfty: return "ainfty";
    case Suite::Cube: return "cube";
    case Suite::Formal: return "formal";
    case Suite::All: return "all";
    }
    return "?";
}

void validate(Suite s, const SuiteOptions& opt)
{
    if (opt.degree < 0 || opt.degree > 12)
        throw UsageError("--degree must be in 0..12");
    const int limit = s == Suite::Cube || s == Suite::Cumulants ? 6 : 4;
    if (s == Suite::Dga || s == Suite::ChainMap) {
        if (opt.n_max < 1 || opt.n_max > 8)
            throw UsageError("--n-max must be in 1..8");
        return;
    }
    if (opt.n_max < 1 || opt.n_max > limit)
        throw UsageError("--n-max must be in 1.." + std::to_string(limit) + " for suite " +
                         std::string(suite_name(s)));
}

int reduced_degree(const SuiteOptions& opt)
{
    return std::min(opt.degree, 3);
}

int cumulant_sweep_exponent(int n, int degree)
{
    if (n <= 3)
        return degree;
    if (n == 4)
        return std::min(degree, 4);
    return std::min(degree, 2);
}

// ---- checks ---------------------------------------------------------------------

namespace {

struct Outcome {
    bool passed = true;
    std::optional<json> witness;
};

using Params = std::vector<std::pair<std::string, std::string>>;

Outcome from_verdict(const Verdict& v)
{
    Outcome o;
    o.passed = v.equal;
    if (!v.equal)
        o.witness = v.to_json();
    return o;
}

Outcome fail_with(json w)
{
    return {false, std::move(w)};
}

json forms_json(std::span<const PolyForm> xs)
{
    json arr = json::array();
    for (const auto& x : xs)
        arr.push_back(to_string(x));
    return arr;
}

json cochains_json(std::span<const Cochain> xs)
{
    json arr = json::array();
    for (const auto& x : xs)
        arr.push_back(to_string(x));
    return arr;
}

class Runner {
public:
    explicit Runner(Report& r) : report_(r) {}

    void run(std::string check, Params params, const std::function<Outcome()>& body)
    {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o = fail_with({{"error", e.what()}});
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        report_.entries.push_back({std::move(check), std::move(params), o.passed, std::move(o.witness),
                                   static_cast<long>(ms)});
    }

private:
    Report& report_;
};

std::string str(int x)
{
    return std::to_string(x);
}

// Calls f on every tuple of length n over `basis`, stopping at the first false.
bool for_each_tuple(const std::vector<PolyForm>& basis, int n,
                    const std::function<bool(const std::vector<PolyForm>&)>& f)
{
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<PolyForm> tuple(static_cast<std::size_t>(n), basis.front());
    for (;;) {
        for (std::size_t i = 0; i < idx.size(); ++i)
            tuple[i] = basis[idx[i]];
        if (!f(tuple))
            return false;
        std::size_t i = idx.size();
        while (i > 0 && ++idx[i - 1] == basis.size())
            idx[--i] = 0;
        if (i == 0)
            return true;
    }
}

// -- dga

void dga_suite(Runner& run, const SuiteOptions& opt)
{
    const int D = opt.degree;
    const auto basis = TruncationGrid{D}.basis();
    const Params p{{"degree", str(D)}};
    run.run("dga_forms_d_squared", p, [&]() -> Outcome {
        for (const auto& x : basis)
            if (!d_form(d_form(x)).is_zero())
                return fail_with(forms_json(std::vector{x}));
        return {};
    });
    run.run("dga_forms_leibniz", p, [&]() -> Outcome {
        for (const auto& a : basis)
            for (const auto& b : basis) {
                const PolyForm rhs = wedge(d_form(a), b) + Rational(parity_sign(a.degree())) * wedge(a, d_form(b));
                if (d_form(wedge(a, b)) != rhs)
                    return fail_with(forms_json(std::vector{a, b}));
            }
        return {};
    });
    run.run("dga_forms_graded_commutative", p, [&]() -> Outcome {
        for (const auto& a : basis)
            for (const auto& b : basis)
                if (wedge(a, b) != Rational(parity_sign(a.degree() * b.degree())) * wedge(b, a))
                    return fail_with(forms_json(std::vector{a, b}));
        return {};
    });
    const auto cb = cochain_basis();
    run.run("dga_cochains_delta_squared", {}, [&]() -> Outcome {
        for (const auto& a : cb)
            if (!delta(delta(a)).is_zero())
                return fail_with(cochains_json(std::vector{a}));
        return {};
    });
    run.run("dga_cochains_cup_associative", {}, [&]() -> Outcome {
        for (const auto& a : cb)
            for (const auto& b : cb)
                for (const auto& c : cb)
                    if (cup(cup(a, b), c) != cup(a, cup(b, c)))
                        return fail_with(cochains_json(std::vector{a, b, c}));
        return {};
    });
    run.run("dga_cochains_delta_leibniz", {}, [&]() -> Outcome {
        for (const auto& a : cb)
            for (const auto& b : cb) {
                const Cochain rhs = cup(delta(a), b) + Rational(parity_sign(a.degree())) * cup(a, delta(b));
                if (delta(cup(a, b)) != rhs)
                    return fail_with(cochains_json(std::vector{a, b}));
            }
        return {};
    });
}

// -- chain map

void chain_map_suite(Runner& run, const SuiteOptions& opt)
{
    const int D = opt.degree;
    run.run("chain_map_stokes", {{"degree", str(D)}}, [&]() -> Outcome {
        for (const auto& x : TruncationGrid{D}.basis())
            if (integrate(d_form(x)) != delta(integrate(x)))
                return fail_with(forms_json(std::vector{x}));
        return {};
    });
    run.run("chain_map_hom_boundary_I", {{"degree", str(D)}}, [&] {
        return from_verdict(is_zero_on_truncation(hom_boundary(iterated_integral_map(1), opt.convention),
                                                  TruncationGrid{D}, "hom_boundary(I)"));
    });
    const int n_top = std::max(opt.n_max, 1);
    run.run("chain_map_simplex_volumes", {{"n_max", str(n_top)}}, [&]() -> Outcome {
        Rational factorial(1);
        for (int n = 1; n <= n_top; ++n) {
            factorial *= Rational(n);
            const std::vector<PolyForm> dts(static_cast<std::size_t>(n), PolyForm::monomial(0, true));
            if (iterated_integral(dts) != Cochain::edge_only(Rational(1) / factorial))
                return fail_with({{"n", n}});
        }
        return {};
    });
}

// -- cumulants

void cumulant_suite(Runner& run, const SuiteOptions& opt)
{
    for (int n = 1; n <= opt.n_max; ++n) {
        const int e = cumulant_sweep_exponent(n, opt.degree);
        const Params p{{"exponent", str(e)}, {"n", str(n)}};
        const auto basis = TruncationGrid{e}.basis();
        run.run("cumulant_direct_equals_recursive", p, [&]() -> Outcome {
            std::optional<json> w;
            for_each_tuple(basis, n, [&](const std::vector<PolyForm>& t) {
                if (cumulant(integration_context(), t) == cumulant_recursive(integration_context(), t))
                    return true;
                w = forms_json(t);
                return false;
            });
            return w ? fail_with(*w) : Outcome{};
        });
        run.run("cumulant_term_count", {{"n", str(n)}}, [&]() -> Outcome {
            const std::vector<PolyForm> ones(static_cast<std::size_t>(n), PolyForm::monomial(0, false));
            const auto count = cumulant_terms(integration_context(), ones).size();
            if (count != (1UL << (n - 1)))
                return fail_with({{"terms", count}});
            return {};
        });
        if (n < 2)
            continue;
        run.run("cumulant_algebra_morphism_vanishes", p, [&]() -> Outcome {
            std::vector<PolyForm> zero_forms;
            for (int k = 0; k <= e; ++k)
                zero_forms.push_back(PolyForm::monomial(static_cast<std::size_t>(k), false));
            std::optional<json> w;
            for_each_tuple(zero_forms, n, [&](const std::vector<PolyForm>& t) {
                if (cumulant(evaluation_context(), t).is_zero())
                    return true;
                w = forms_json(t);
                return false;
            });
            return w ? fail_with(*w) : Outcome{};
        });
    }
    if (opt.n_max >= 2) {
        const int e = cumulant_sweep_exponent(2, opt.degree);
        run.run("cumulant_k2_formula", {{"exponent", str(e)}}, [&]() -> Outcome {
            std::optional<json> w;
            for_each_tuple(TruncationGrid{e}.basis(), 2, [&](const std::vector<PolyForm>& t) {
                const Cochain k2 = integrate(wedge(t[0], t[1])) - cup(integrate(t[0]), integrate(t[1]));
                if (cumulant(integration_context(), t) == k2)
                    return true;
                w = forms_json(t);
                return false;
            });
            return w ? fail_with(*w) : Outcome{};
        });
    }
}

// -- A∞ morphism and homotopies

void ainfty_suite(Runner& run, const SuiteOptions& opt)
{
    const int D = opt.degree;
    const auto conv = opt.convention;
    for (int n = 1; n <= opt.n_max; ++n) {
        run.run("ainfty_relation_defect", {{"degree", str(D)}, {"n", str(n)}},
                [&] { return from_verdict(ainfty_relation_defect(n, D, conv).verdict); });
        run.run("hom_boundary_squared", {{"degree", str(D)}, {"n", str(n)}}, [&] {
            return from_verdict(is_zero_on_truncation(hom_boundary(hom_boundary(iterated_integral_map(n), conv), conv),
                                                      TruncationGrid{D}, "hom_boundary^2"));
        });
    }
    if (opt.n_max >= 2) {
        run.run("hom_boundary_I2_equals_K2", {{"degree", str(D)}}, [&] {
            return from_verdict(maps_equal_on_truncation(hom_boundary(iterated_integral_map(2), conv), cumulant_map(2),
                                                         TruncationGrid{D}, "hom_boundary(I2) = K2"));
        });
        run.run("exact_forms_identity", {{"degree", str(D)}}, [&]() -> Outcome {
            // I_2(df, dg) = K_2(f, dg) for f, g vanishing at 0
            for (int j = 1; j <= std::max(D, 1); ++j)
                for (int k = 1; k <= std::max(D, 1); ++k) {
                    const auto f = PolyForm::monomial(static_cast<std::size_t>(j), false);
                    const auto g = PolyForm::monomial(static_cast<std::size_t>(k), false);
                    const std::vector<PolyForm> lhs{d_form(f), d_form(g)};
                    const std::vector<PolyForm> rhs{f, d_form(g)};
                    if (iterated_integral(lhs) != cumulant(integration_context(), rhs))
                        return fail_with(forms_json(std::vector{f, g}));
                }
            return {};
        });
    }
    for (int n = 2; n <= opt.n_max; ++n)
        run.run("homotopy_witness_boundary", {{"degree", str(D)}, {"n", str(n)}}, [&] {
            return from_verdict(maps_equal_on_truncation(hom_boundary(homotopy_witness(n, conv), conv), cumulant_map(n),
                                                         TruncationGrid{D}, "hom_boundary(H_n) = K_n"));
        });
    if (opt.n_max >= 3) {
        for (auto [variant, name] : {std::pair{WitnessVariant::Left, "left"}, std::pair{WitnessVariant::Right, "right"}})
            run.run("alternate_witness_k3", {{"degree", str(D)}, {"variant", name}}, [&, variant] {
                return from_verdict(maps_equal_on_truncation(hom_boundary(alternate_witness_k3(variant, conv), conv),
                                                             cumulant_map(3), TruncationGrid{D}, "alternate witness"));
            });
        run.run("square_cycle_is_cycle", {{"degree", str(D)}}, [&] {
            return from_verdict(
                is_zero_on_truncation(hom_boundary(square_cycle(conv), conv), TruncationGrid{D}, "square cycle"));
        });
        run.run("square_cycle_bounds_p3", {{"degree", str(D)}}, [&] {
            return from_verdict(maps_equal_on_truncation(square_cycle(conv),
                                                         hom_boundary(unshifted_component(3), conv), TruncationGrid{D},
                                                         "square cycle = hom_boundary(p3)"));
        });
    }
}

// -- cube

void cube_suite(Runner& run, const SuiteOptions& opt)
{
    const auto conv = opt.convention;
    for (int n = 2; n <= opt.n_max; ++n) {
        const Params p{{"n", str(n)}};
        run.run("cube_graph_is_hypercube", p, [&]() -> Outcome {
            const Graph g = cumulant_graph(n);
            const long v = 1L << (n - 1);
            const long e = (n - 1) * (1L << (n - 2));
            const auto iso = hypercube_isomorphism(n);
            const bool ok = g.vertex_count() == v && g.edge_count() == e && g.regular_degree() == n - 1 &&
                            g.is_bipartite() && g.is_connected() && iso.holds();
            if (ok)
                return {};
            return fail_with({{"vertices", g.vertex_count()},
                              {"edges", g.edge_count()},
                              {"regular_degree", g.regular_degree()},
                              {"bipartite", g.is_bipartite()},
                              {"connected", g.is_connected()},
                              {"isomorphism", iso.holds()}});
        });
        run.run("cube_adjacent_signs_opposite", p, [&]() -> Outcome {
            const Graph g = cumulant_graph(n);
            const auto comps = compositions(n);
            for (auto [a, b] : g.edges)
                if (composition_sign(comps[static_cast<std::size_t>(a)]) ==
                    composition_sign(comps[static_cast<std::size_t>(b)]))
                    return fail_with({{"edge", {comps[static_cast<std::size_t>(a)].str(),
                                                comps[static_cast<std::size_t>(b)].str()}}});
            return {};
        });
        run.run("cube_euler_characteristic", p, [&]() -> Outcome {
            const long chi = euler_characteristic(n);
            if (chi != 1)
                return fail_with({{"euler_characteristic", chi}});
            return {};
        });
        run.run("cube_boundary_squared", p, [&]() -> Outcome {
            for (const auto& c : all_cells(n)) {
                if (c.dimension() < 2)
                    continue;
                std::vector<SignedCell> twice;
                for (const auto& f : cell_boundary(c))
                    for (const auto& g : cell_boundary(f.cell))
                        twice.push_back({f.sign * g.sign, g.cell});
                if (!collect(twice).empty())
                    return fail_with({{"cell", c.str()}});
            }
            return {};
        });
    }
    const int D = reduced_degree(opt);
    for (int n = 2; n <= std::min(opt.n_max, 4); ++n) {
        const Params p{{"degree", str(D)}, {"n", str(n)}};
        run.run("cube_vertex_sum_equals_Kn", p, [&] {
            return from_verdict(
                maps_equal_on_truncation(vertex_sum(n, conv), cumulant_map(n), TruncationGrid{D}, "vertex sum = K_n"));
        });
        run.run("cube_cells_verified", p, [&]() -> Outcome {
            for (const auto& c : all_cells(n)) {
                if (c.dimension() == 0)
                    continue;
                const Verdict v = verify_cell(n, c, D, conv);
                if (!v.equal)
                    return fail_with(v.to_json());
            }
            return {};
        });
    }
}

// -- formal layer

long catalan(int k)
{
    std::vector<long> c{1};
    for (int m = 1; m <= k; ++m) {
        long s = 0;
        for (int i = 0; i < m; ++i)
            s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
        c.push_back(s);
    }
    return c[static_cast<std::size_t>(k)];
}

void formal_suite(Runner& run, const SuiteOptions& opt)
{
    const auto conv = opt.convention;
    for (int n = 1; n <= opt.n_max; ++n) {
        const Params p{{"n", str(n)}};
        run.run("formal_d_squared", p, [&]() -> Outcome {
            const auto v = check_d_squared(n, conv);
            if (v.passed)
                return {};
            return fail_with({{"residue", v.residue.str()}});
        });
        run.run("formal_painted_tree_count", p, [&]() -> Outcome {
            long expected = 0;
            for (const auto& comp : compositions(n)) {
                long term = catalan(comp.block_count() - 1);
                for (int b : comp.blocks)
                    term *= catalan(b - 1);
                expected += term;
            }
            const auto trees = painted_trees(n).size();
            const auto cells = painted_cells(n, 0).size();
            if (static_cast<long>(trees) == expected && trees == cells)
                return {};
            return fail_with({{"painted_trees", trees}, {"vertex_cells", cells}, {"expected", expected}});
        });
        run.run("formal_contractibility", p, [&]() -> Outcome {
            const auto r = associahedron_contractibility(n, conv);
            if (r.holds())
                return {};
            return fail_with({{"vertices", r.vertices},
                              {"edges", r.edges},
                              {"faces", r.faces},
                              {"cycle_rank", r.cycle_rank},
                              {"face_boundary_rank", r.face_boundary_rank}});
        });
        run.run("formal_concrete_agreement", {{"degree", str(reduced_degree(opt))}, {"n", str(n)}}, [&] {
            const MultiMap formal = interpret(formal_boundary(FormalTree::p(n), conv), n, 1, conv);
            return from_verdict(maps_equal_on_truncation(formal, hom_boundary(iterated_integral_map(n), conv),
                                                         TruncationGrid{reduced_degree(opt)}, "formal vs concrete"));
        });
        if (n < 2)
            continue;
        run.run("formal_polytope_graph", p, [&]() -> Outcome {
            const auto pg = cumulant_polytope_graph(n, conv);
            if (pg.graph.is_connected())
                return {};
            return fail_with({{"connected", false}});
        });
        run.run("formal_associative_matches_cube", p, [&]() -> Outcome {
            const FormalSum s = specialize_associative(formal_boundary(FormalTree::p(n), conv));
            std::multiset<CubeCell> words;
            for (const auto& [t, c] : s.terms())
                words.insert(to_cube_word(t));
            CubeCell top;
            top.word.assign(static_cast<std::size_t>(n - 1), Cut::Free);
            std::multiset<CubeCell> facets;
            for (const auto& f : cell_boundary(top))
                facets.insert(f.cell);
            if (words == facets)
                return {};
            json w = json::array();
            for (const auto& c : words)
                w.push_back(c.str());
            return fail_with({{"words", w}});
        });
    }
    run.run("formal_binary_tree_counts", {{"n_max", "8"}}, [&]() -> Outcome {
        for (int n = 1; n <= 8; ++n)
            if (static_cast<long>(binary_trees(n).size()) != catalan(n - 1))
                return fail_with({{"n", n}, {"count", binary_trees(n).size()}});
        return {};
    });
    if (opt.n_max >= 3)
        run.run("formal_hexagon", {{"n", "3"}}, [&]() -> Outcome {
            const FormalSum b = formal_boundary(FormalTree::p(3), conv);
            const auto pg = cumulant_polytope_graph(3, conv);
            std::set<FormalTree> edge_cells(pg.edge_cells.begin(), pg.edge_cells.end());
            std::set<FormalTree> terms;
            for (const auto& [t, c] : b.terms())
                terms.insert(t);
            const bool ok = b.size() == 6 && terms == edge_cells && pg.graph.vertex_count() == 6 &&
                            pg.graph.edge_count() == 6 && pg.graph.regular_degree() == 2 && pg.graph.is_connected();
            if (ok)
                return {};
            return fail_with({{"terms", b.size()}, {"vertices", pg.graph.vertex_count()}, {"edges", pg.graph.edge_count()}});
        });
}

}  // namespace

Report run_suite(Suite s, const SuiteOptions& opt)
{
    validate(s, opt);
    Report report;
    report.convention = opt.convention;
    Runner run(report);
    if (s == Suite::Dga || s == Suite::All)
        dga_suite(run, opt);
    if (s == Suite::ChainMap || s == Suite::All)
        chain_map_suite(run, opt);
    if (s == Suite::Cumulants || s == Suite::All)
        cumulant_suite(run, opt);
    if (s == Suite::Ainfty || s == Suite::All)
        ainfty_suite(run, opt);
    if (s == Suite::Cube || s == Suite::All)
        cube_suite(run, opt);
    if (s == Suite::Formal || s == Suite::All)
        formal_suite(run, opt);
    report.sort();
    return report;
}

}  // namespace bcum
