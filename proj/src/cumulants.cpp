#include "bcum/cumulants.hpp"

#include <numeric>
#include <stdexcept>

namespace bcum {

int Composition::n() const
{
    return std::accumulate(blocks.begin(), blocks.end(), 0);
}

std::vector<int> Composition::cuts() const
{
    std::vector<int> out;
    int pos = 0;
    for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
        pos += blocks[b];
        out.push_back(pos);
    }
    return out;
}

Composition Composition::from_cuts(int n, const std::vector<int>& cuts)
{
    Composition c;
    int prev = 0;
    for (int cut : cuts) {
        if (cut <= prev || cut >= n)
            throw std::invalid_argument("Composition::from_cuts: cuts must be increasing in 1..n-1");
        c.blocks.push_back(cut - prev);
        prev = cut;
    }
    c.blocks.push_back(n - prev);
    return c;
}

std::string Composition::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(blocks[i]);
    }
    return s + ")";
}

std::vector<Composition> compositions(int n)
{
    if (n < 1)
        throw std::invalid_argument("compositions: n must be positive");
    if (n > 30)
        throw std::invalid_argument("compositions: n too large");
    std::vector<Composition> out;
    const unsigned long count = 1UL << (n - 1);
    out.reserve(count);
    for (unsigned long mask = 0; mask < count; ++mask) {
        std::vector<int> cuts;
        for (int i = 1; i < n; ++i)
            if (mask & (1UL << (i - 1)))
                cuts.push_back(i);
        out.push_back(Composition::from_cuts(n, cuts));
    }
    return out;
}

int composition_sign(const Composition& c)
{
    return parity_sign(c.block_count() - 1);
}

CumulantContext::CumulantContext(ChainMap chain_map, SourceProduct source_product, TargetProduct target_product,
                                 int check_degree)
    : chain_map_(std::move(chain_map)),
      source_product_(std::move(source_product)),
      target_product_(std::move(target_product))
{
    for (int k = 0; k <= check_degree; ++k) {
        for (bool one : {false, true}) {
            const auto x = PolyForm::monomial(static_cast<std::size_t>(k), one);
            if (delta(chain_map_(x)) != chain_map_(d_form(x)))
                throw std::invalid_argument("CumulantContext: map does not commute with the differentials");
        }
    }
}

const CumulantContext& integration_context()
{
    static const CumulantContext ctx(
        [](const PolyForm& a) { return integrate(a); },
        [](const PolyForm& a, const PolyForm& b) { return wedge(a, b); },
        [](const Cochain& a, const Cochain& b) { return cup(a, b); });
    return ctx;
}

const CumulantContext& evaluation_context()
{
    static const CumulantContext ctx(
        [](const PolyForm& a) {
            const Rational v = a.part0(Rational(0));
            return Cochain::vertices(v, v);
        },
        [](const PolyForm& a, const PolyForm& b) { return wedge(a, b); },
        [](const Cochain& a, const Cochain& b) { return cup(a, b); });
    return ctx;
}

std::vector<CumulantTerm> cumulant_terms(const CumulantContext& ctx, std::span<const PolyForm> inputs)
{
    if (inputs.empty())
        throw std::invalid_argument("cumulant: needs at least one input");
    std::vector<CumulantTerm> terms;
    for (auto& comp : compositions(static_cast<int>(inputs.size()))) {
        std::size_t pos = 0;
        Cochain value;
        bool first = true;
        for (int len : comp.blocks) {
            PolyForm block = inputs[pos];
            for (int j = 1; j < len; ++j)
                block = ctx.source_product(block, inputs[pos + j]);
            pos += static_cast<std::size_t>(len);
            Cochain image = ctx.map(block);
            value = first ? image : ctx.target_product(value, image);
            first = false;
        }
        const int sign = composition_sign(comp);
        terms.push_back({std::move(comp), sign, std::move(value)});
    }
    return terms;
}

Cochain cumulant(const CumulantContext& ctx, std::span<const PolyForm> inputs)
{
    Cochain total;
    for (const auto& t : cumulant_terms(ctx, inputs))
        total += Rational(t.sign) * t.value;
    return total;
}

Cochain cumulant_recursive(const CumulantContext& ctx, std::span<const PolyForm> inputs)
{
    if (inputs.empty())
        throw std::invalid_argument("cumulant_recursive: needs at least one input");
    if (inputs.size() == 1)
        return ctx.map(inputs.front());
    std::vector<PolyForm> merged;
    merged.reserve(inputs.size() - 1);
    merged.push_back(ctx.source_product(inputs[0], inputs[1]));
    merged.insert(merged.end(), inputs.begin() + 2, inputs.end());
    return cumulant_recursive(ctx, merged)
         - ctx.target_product(ctx.map(inputs[0]), cumulant_recursive(ctx, inputs.subspan(1)));
}

std::string input_name(int i)
{
    if (i < 26)
        return std::string(1, static_cast<char>('a' + i));
    return "a" + std::to_string(i + 1);
}

std::string cumulant_formula(int n)
{
    std::string out;
    for (const auto& comp : compositions(n)) {
        const int sign = composition_sign(comp);
        if (out.empty())
            out = sign < 0 ? "-" : "";
        else
            out += sign < 0 ? " - " : " + ";
        int pos = 0;
        for (int len : comp.blocks) {
            out += "e(";
            for (int j = 0; j < len; ++j)
                out += input_name(pos + j);
            out += ")";
            pos += len;
        }
    }
    return out;
}

}  // namespace bcum
