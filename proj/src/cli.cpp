#include "bcum/cli.hpp"

#include "bcum/cube_complex.hpp"
#include "bcum/cumulants.hpp"
#include "bcum/formal_ainfty.hpp"
#include "bcum/suites.hpp"
#include "bcum/text_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>

namespace bcum {

namespace {

struct VerifyArgs {
    std::string suite = "all";
    int n_max = 3;
    int degree = 4;
    std::string out;
    std::string format = "json";
    std::string convention = "A";
};

struct GraphArgs {
    std::string kind;
    int n = 0;
    std::string format = "dot";
    std::string convention = "A";
};

struct CumulantArgs {
    int n = 0;
    std::string inputs;
    bool has_inputs = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    if (a.format != "json")
        throw UsageError("verify supports --format json only");
    const Suite suite = parse_suite(a.suite);
    SuiteOptions opt;
    opt.n_max = a.n_max;
    opt.degree = a.degree;
    opt.convention = parse_convention(a.convention);
    validate(suite, opt);

    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file)
            throw UsageError("cannot write '" + a.out + "'");
    }
    const Report report = run_suite(suite, opt);
    (a.out.empty() ? out : file) << report.to_json().dump(2) << "\n";
    const auto failed = std::count_if(report.entries.begin(), report.entries.end(),
                                      [](const ReportEntry& e) { return !e.passed; });
    err << "suite " << suite_name(suite) << ": " << report.entries.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

int cmd_graph(const GraphArgs& a, std::ostream& out)
{
    if (a.format != "dot")
        throw UsageError("graph supports --format dot only");
    const SignConvention conv = parse_convention(a.convention);
    if (a.kind == "cube") {
        if (a.n < 2 || a.n > 8)
            throw UsageError("graph cube: n must be in 2..8");
        out << cumulant_graph(a.n).to_dot("G" + std::to_string(a.n));
        return 0;
    }
    if (a.kind == "polytope") {
        if (a.n < 2 || a.n > 4)
            throw UsageError("graph polytope: n must be in 2..4");
        out << cumulant_polytope_graph(a.n, conv).graph.to_dot("K" + std::to_string(a.n));
        return 0;
    }
    throw UsageError("unknown graph kind '" + a.kind + "' (expected cube or polytope)");
}

int cmd_cumulant(const CumulantArgs& a, std::ostream& out)
{
    if (a.n < 1 || a.n > 6)
        throw UsageError("cumulant: n must be in 1..6");
    std::vector<PolyForm> forms;
    if (a.has_inputs) {
        forms = parse_form_tuple(a.inputs);
        if (static_cast<int>(forms.size()) != a.n)
            throw UsageError("cumulant: expected " + std::to_string(a.n) + " inputs separated by ';', got " +
                             std::to_string(forms.size()));
    }
    out << "K" << a.n << " = " << cumulant_formula(a.n) << "\n";
    if (!a.has_inputs)
        return 0;
    for (int i = 0; i < a.n; ++i)
        out << input_name(i) << " = " << to_string(forms[static_cast<std::size_t>(i)]) << "\n";
    Cochain total;
    for (const auto& term : cumulant_terms(integration_context(), forms)) {
        std::string product;
        int pos = 0;
        for (int len : term.composition.blocks) {
            product += "e(";
            for (int j = 0; j < len; ++j)
                product += input_name(pos + j);
            product += ")";
            pos += len;
        }
        out << (term.sign > 0 ? "+ " : "- ") << product << " = " << to_string(term.value) << "\n";
        total += Rational(term.sign) * term.value;
    }
    out << "total = " << to_string(total) << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of Boolean cumulants, iterated integrals and their homotopies", "bcum"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run a verification suite and print a JSON report");
    verify->add_option("suite,--suite", va.suite, "dga, chain-map, cumulants, ainfty, cube, formal or all (default)");
    verify->add_option("--n-max", va.n_max, "largest arity checked (default 3)");
    verify->add_option("--degree", va.degree, "largest monomial exponent of the grids (default 4)");
    verify->add_option("--out", va.out, "write the report here instead of standard output");
    verify->add_option("--format", va.format, "json");
    verify->add_option("--sign-convention", va.convention, "A (koszul-left) or B (koszul-right)");

    GraphArgs ga;
    auto* graph = app.add_subcommand("graph", "print the cube graph G_n or the cumulant polytope graph as DOT");
    graph->add_option("kind", ga.kind, "cube or polytope")->required();
    graph->add_option("n", ga.n, "number of inputs")->required();
    graph->add_option("--format", ga.format, "dot");
    graph->add_option("--sign-convention", ga.convention, "A or B");

    CumulantArgs ca;
    auto* cum = app.add_subcommand("cumulant", "print K_n, or evaluate it on forms");
    cum->add_option("n", ca.n, "number of inputs")->required();
    auto* inputs = cum->add_option("--inputs", ca.inputs, "forms separated by ';', e.g. \"t ; dt\"");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run 'bcum --help' for usage\n";
        return 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(va, out, err);
        if (graph->parsed())
            return cmd_graph(ga, out);
        ca.has_inputs = inputs->count() > 0;
        return cmd_cumulant(ca, out);
    } catch (const ParseError& e) {
        err << "error: malformed form: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace bcum
