#include "bcum/hom_complex.hpp"

#include "bcum/text_io.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace bcum {

std::string_view convention_name(SignConvention c)
{
    return c == SignConvention::KoszulLeft ? "A" : "B";
}

SignConvention parse_convention(std::string_view text)
{
    if (text == "A" || text == "a" || text == "koszul-left")
        return SignConvention::KoszulLeft;
    if (text == "B" || text == "b" || text == "koszul-right")
        return SignConvention::KoszulRight;
    throw std::invalid_argument("unknown sign convention '" + std::string(text) + "' (expected A or B)");
}

int suspension_sign(SignConvention conv, std::span<const int> degrees)
{
    const long n = static_cast<long>(degrees.size());
    long e = 0;
    for (long j = 0; j < n; ++j) {
        const long weight = conv == SignConvention::KoszulLeft ? n - 1 - j : j;
        e += weight * (degrees[static_cast<std::size_t>(j)] - 1);
    }
    return parity_sign(e);
}

namespace {

int input_degree_sum(std::span<const PolyForm> a, std::size_t lo, std::size_t hi)
{
    int s = 0;
    for (std::size_t j = lo; j < hi; ++j)
        s += a[j].degree();
    return s;
}

int shifted_degree_sum(std::span<const PolyForm> a, std::size_t lo, std::size_t hi)
{
    return input_degree_sum(a, lo, hi) - static_cast<int>(hi - lo);
}

int suspension_sign(SignConvention conv, std::span<const PolyForm> a)
{
    std::vector<int> deg(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        deg[j] = a[j].degree();
    return suspension_sign(conv, deg);
}

// Koszul sign for an operation of shifted degree `op_degree` acting on the
// inputs [lo, hi) while the remaining shifted inputs stay in place.
int passing_sign(SignConvention conv, int op_degree, std::span<const PolyForm> a, std::size_t lo, std::size_t hi)
{
    const int passed = conv == SignConvention::KoszulLeft ? shifted_degree_sum(a, 0, lo)
                                                          : shifted_degree_sum(a, hi, a.size());
    return parity_sign(static_cast<long>(op_degree) * passed);
}

Cochain shifted_value(const MultiMap& f, std::span<const PolyForm> a, SignConvention conv)
{
    return Rational(suspension_sign(conv, a)) * f.eval_homogeneous(a);
}

void require_same_arity(const MultiMap& f, const MultiMap& g, const char* what)
{
    if (f.arity() != g.arity())
        throw std::invalid_argument(std::string(what) + ": arity mismatch");
}

}  // namespace

// ---- MultiMap ---------------------------------------------------------------

MultiMap::MultiMap(int arity, int shifted_degree, Evaluator eval, std::string name)
    : arity_(arity), shifted_degree_(shifted_degree), eval_(std::make_shared<const Evaluator>(std::move(eval))),
      name_(std::move(name))
{
    if (arity < 1)
        throw std::invalid_argument("MultiMap: arity must be positive");
}

MultiMap MultiMap::zero(int arity, int shifted_degree)
{
    return MultiMap(arity, shifted_degree, [](std::span<const PolyForm>) { return Cochain{}; }, "0");
}

MultiMap MultiMap::renamed(std::string name) const
{
    MultiMap copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

Cochain MultiMap::operator()(std::span<const PolyForm> inputs) const
{
    if (static_cast<int>(inputs.size()) != arity_)
        throw std::invalid_argument("MultiMap '" + name_ + "': expected " + std::to_string(arity_) + " inputs");
    std::vector<std::vector<PolyForm>> parts;
    parts.reserve(inputs.size());
    for (const auto& x : inputs) {
        parts.push_back(homogeneous_parts(x));
        if (parts.back().empty())
            return {};
    }
    std::vector<std::size_t> choice(inputs.size(), 0);
    std::vector<PolyForm> tuple(inputs.size());
    Cochain total;
    for (;;) {
        for (std::size_t i = 0; i < inputs.size(); ++i)
            tuple[i] = parts[i][choice[i]];
        total += (*eval_)(tuple);
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] == parts[i].size())
            choice[i++] = 0;
        if (i == choice.size())
            return total;
    }
}

MultiMap operator+(const MultiMap& f, const MultiMap& g)
{
    require_same_arity(f, g, "MultiMap +");
    return MultiMap(
        f.arity(), f.shifted_degree(),
        [f, g](std::span<const PolyForm> a) { return f.eval_homogeneous(a) + g.eval_homogeneous(a); },
        f.name() + " + " + g.name());
}

MultiMap operator-(const MultiMap& f, const MultiMap& g)
{
    require_same_arity(f, g, "MultiMap -");
    return MultiMap(
        f.arity(), f.shifted_degree(),
        [f, g](std::span<const PolyForm> a) { return f.eval_homogeneous(a) - g.eval_homogeneous(a); },
        f.name() + " - (" + g.name() + ")");
}

MultiMap operator*(const Rational& s, const MultiMap& f)
{
    return MultiMap(
        f.arity(), f.shifted_degree(), [s, f](std::span<const PolyForm> a) { return s * f.eval_homogeneous(a); },
        s.str() + "*(" + f.name() + ")");
}

// ---- named maps -------------------------------------------------------------

MultiMap iterated_integral_map(int n)
{
    if (n < 1)
        throw std::invalid_argument("iterated_integral_map: n must be positive");
    return MultiMap(n, 0, [](std::span<const PolyForm> a) { return iterated_integral(a); },
                    n == 1 ? "I" : "I" + std::to_string(n));
}

MultiMap unshifted_component(int n)
{
    const long pairs = static_cast<long>(n - 1) * (n - 2) / 2;
    const MultiMap in = iterated_integral_map(n);
    if (parity_sign(pairs) > 0)
        return in;
    return (Rational(-1) * in).renamed("-" + in.name());
}

MultiMap cumulant_map(int n)
{
    if (n < 1)
        throw std::invalid_argument("cumulant_map: n must be positive");
    return MultiMap(n, n - 1, [](std::span<const PolyForm> a) { return cumulant(integration_context(), a); },
                    "K" + std::to_string(n));
}

// ---- unshifted composites ---------------------------------------------------

MultiMap precompose_product(const MultiMap& f, int slot)
{
    if (slot < 0 || slot >= f.arity())
        throw std::invalid_argument("precompose_product: slot out of range");
    const auto s = static_cast<std::size_t>(slot);
    return MultiMap(
        f.arity() + 1, f.shifted_degree() + 1,
        [f, s](std::span<const PolyForm> a) {
            PolyForm merged = wedge(a[s], a[s + 1]);
            if (merged.is_zero())
                return Cochain{};
            std::vector<PolyForm> b(a.begin(), a.end());
            b[s] = std::move(merged);
            b.erase(b.begin() + static_cast<std::ptrdiff_t>(s) + 1);
            return f.eval_homogeneous(b);
        },
        f.name() + "(.." + std::to_string(slot) + "∧..)");
}

MultiMap cup_maps(const MultiMap& f, const MultiMap& g, SignConvention conv)
{
    const int p = f.arity();
    const int q = g.arity();
    const int deg = f.degree() + g.degree();
    return MultiMap(
        p + q, deg + p + q - 1,
        [f, g, p, conv](std::span<const PolyForm> a) {
            const auto left = a.first(static_cast<std::size_t>(p));
            const auto right = a.subspan(static_cast<std::size_t>(p));
            const int sign = conv == SignConvention::KoszulLeft
                               ? parity_sign(static_cast<long>(g.degree()) * input_degree_sum(a, 0, left.size()))
                               : parity_sign(static_cast<long>(f.degree()) *
                                             input_degree_sum(a, left.size(), a.size()));
            Cochain x = f.eval_homogeneous(left);
            if (x.is_zero())
                return Cochain{};
            return Rational(sign) * cup(x, g.eval_homogeneous(right));
        },
        f.name() + "·" + g.name());
}

// ---- shifted-world combinators ----------------------------------------------

MultiMap hom_boundary(const MultiMap& f, SignConvention conv)
{
    return MultiMap(
        f.arity(), f.shifted_degree() + 1,
        [f, conv](std::span<const PolyForm> a) {
            // shifted: m1 ∘ f' - (-1)^{|f'|} f' ∘ (1..⊗ m1 ⊗..1); unshifted value = eps(a) * shifted
            const int eps = suspension_sign(conv, a);
            Cochain shifted = Rational(eps) * delta(f.eval_homogeneous(a));
            const int outer = -parity_sign(f.shifted_degree());
            std::vector<PolyForm> b(a.begin(), a.end());
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i].degree() != 0)
                    continue;
                PolyForm da = d_form(a[i]);
                if (da.is_zero())
                    continue;
                b[i] = std::move(da);
                const int sign = outer * passing_sign(conv, 1, a, i, i + 1);
                shifted += Rational(sign) * shifted_value(f, b, conv);
                b[i] = a[i];
            }
            return Rational(eps) * shifted;
        },
        "∂(" + f.name() + ")");
}

MultiMap insert_source(const MultiMap& f, int slot, int k, SignConvention conv)
{
    if (k < 1)
        throw std::invalid_argument("insert_source: operation arity must be positive");
    if (slot < 0 || slot >= f.arity())
        throw std::invalid_argument("insert_source: slot out of range");
    const int arity = f.arity() + k - 1;
    const std::string name = f.name() + "(1^" + std::to_string(slot) + "⊗m" + std::to_string(k) + ")";
    if (k >= 3)
        return MultiMap::zero(arity, f.shifted_degree() + 1).renamed(name);
    const auto s = static_cast<std::size_t>(slot);
    const auto width = static_cast<std::size_t>(k);
    return MultiMap(
        arity, f.shifted_degree() + 1,
        [f, s, width, conv](std::span<const PolyForm> a) {
            PolyForm image;
            int op_sign = 1;
            if (width == 1) {
                if (a[s].degree() != 0)
                    return Cochain{};
                image = d_form(a[s]);
            } else {
                image = wedge(a[s], a[s + 1]);
                const int pair[2] = {a[s].degree(), a[s + 1].degree()};
                op_sign = suspension_sign(conv, std::span<const int>(pair));
            }
            if (image.is_zero())
                return Cochain{};
            std::vector<PolyForm> b;
            b.reserve(a.size() - width + 1);
            b.insert(b.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(s));
            b.push_back(std::move(image));
            b.insert(b.end(), a.begin() + static_cast<std::ptrdiff_t>(s + width), a.end());
            const int sign = suspension_sign(conv, a) * passing_sign(conv, 1, a, s, s + width) * op_sign;
            return Rational(sign) * shifted_value(f, b, conv);
        },
        name);
}

MultiMap target_operation(std::span<const MultiMap> factors, SignConvention conv)
{
    if (factors.empty())
        throw std::invalid_argument("target_operation: needs at least one factor");
    int arity = 0;
    int degree = 1;
    std::string name = "m" + std::to_string(factors.size()) + "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        arity += factors[i].arity();
        degree += factors[i].shifted_degree();
        name += (i ? "⊗" : "") + factors[i].name();
    }
    name += ")";
    if (factors.size() >= 3)
        return MultiMap::zero(arity, degree).renamed(name);
    if (factors.size() == 1) {
        const MultiMap f = factors[0];
        return MultiMap(
            arity, degree, [f](std::span<const PolyForm> a) { return delta(f.eval_homogeneous(a)); }, name);
    }
    const MultiMap f = factors[0];
    const MultiMap g = factors[1];
    return MultiMap(
        arity, degree,
        [f, g, conv](std::span<const PolyForm> a) {
            const auto p = static_cast<std::size_t>(f.arity());
            const auto left = a.first(p);
            const auto right = a.subspan(p);
            const int koszul = conv == SignConvention::KoszulLeft
                                 ? parity_sign(static_cast<long>(g.shifted_degree()) * shifted_degree_sum(a, 0, p))
                                 : parity_sign(static_cast<long>(f.shifted_degree()) *
                                               shifted_degree_sum(a, p, a.size()));
            Cochain y = shifted_value(f, left, conv);
            if (y.is_zero())
                return Cochain{};
            Cochain z = shifted_value(g, right, conv);
            if (z.is_zero())
                return Cochain{};
            // unshifted degrees of the two intermediate cochains
            const int pair[2] = {f.degree() + input_degree_sum(a, 0, p),
                                 g.degree() + input_degree_sum(a, p, a.size())};
            const int sign = suspension_sign(conv, a) * koszul * suspension_sign(conv, std::span<const int>(pair));
            return Rational(sign) * cup(y, z);
        },
        name);
}

// ---- homotopies ---------------------------------------------------------------

MultiMap homotopy_witness(int n, SignConvention conv)
{
    if (n < 2)
        throw std::invalid_argument("homotopy_witness: n must be at least 2");
    MultiMap h = iterated_integral_map(2);
    for (int k = 3; k <= n; ++k)
        h = (precompose_product(h, 0) - cup_maps(iterated_integral_map(1), h, conv))
                .renamed("H" + std::to_string(k));
    return h;
}

WitnessVariant parse_witness_variant(std::string_view text)
{
    if (text == "left")
        return WitnessVariant::Left;
    if (text == "right")
        return WitnessVariant::Right;
    throw std::invalid_argument("unknown witness variant '" + std::string(text) + "' (expected left or right)");
}

MultiMap alternate_witness_k3(WitnessVariant variant, SignConvention conv)
{
    const MultiMap i1 = iterated_integral_map(1);
    const MultiMap i2 = iterated_integral_map(2);
    if (variant == WitnessVariant::Left)
        return (precompose_product(i2, 0) - cup_maps(i1, i2, conv)).renamed("p2(ab,c) - p1(a)p2(b,c)");
    return (precompose_product(i2, 1) - cup_maps(i2, i1, conv)).renamed("p2(a,bc) - p2(a,b)p1(c)");
}

MultiMap square_cycle(SignConvention conv)
{
    return (alternate_witness_k3(WitnessVariant::Left, conv) - alternate_witness_k3(WitnessVariant::Right, conv))
        .renamed("p2(ab,c) - p1(a)p2(b,c) - p2(a,bc) + p2(a,b)p1(c)");
}

// ---- certification ------------------------------------------------------------

std::vector<PolyForm> TruncationGrid::basis() const
{
    if (max_exponent < 0)
        throw std::invalid_argument("TruncationGrid: negative exponent bound");
    std::vector<PolyForm> b;
    for (bool one : {false, true})
        for (int k = 0; k <= max_exponent; ++k)
            b.push_back(PolyForm::monomial(static_cast<std::size_t>(k), one));
    return b;
}

nlohmann::json Verdict::to_json() const
{
    nlohmann::json j{{"check", check}, {"arity", arity}, {"grid_D", grid_D}, {"status", equal ? "pass" : "fail"}};
    if (witness) {
        auto arr = nlohmann::json::array();
        for (const auto& w : *witness)
            arr.push_back(to_string(w));
        j["witness_tuple"] = arr;
    }
    if (lhs)
        j["lhs"] = bcum::to_json(*lhs);
    if (rhs)
        j["rhs"] = bcum::to_json(*rhs);
    return j;
}

namespace {

constexpr std::size_t kNoFailure = std::numeric_limits<std::size_t>::max();

}  // namespace

Verdict maps_equal_on_truncation(const MultiMap& f, const MultiMap& g, TruncationGrid grid, std::string check)
{
    require_same_arity(f, g, "maps_equal_on_truncation");
    const auto basis = grid.basis();
    const std::size_t m = basis.size();
    const auto n = static_cast<std::size_t>(f.arity());
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > std::numeric_limits<std::size_t>::max() / m)
            throw std::invalid_argument("maps_equal_on_truncation: grid too large");
        total *= m;
    }

    auto decode = [&](std::size_t idx, std::vector<PolyForm>& tuple) {
        for (std::size_t i = n; i-- > 0;) {
            tuple[i] = basis[idx % m];
            idx /= m;
        }
    };

    // Contiguous index ranges per worker; the smallest failing index wins, so
    // the reported witness does not depend on scheduling.
    std::atomic<std::size_t> first_failure{kNoFailure};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto sweep = [&](std::size_t lo, std::size_t hi) {
        try {
            std::vector<PolyForm> tuple(n);
            for (std::size_t idx = lo; idx < hi; ++idx) {
                if (idx > first_failure.load(std::memory_order_relaxed))
                    return;
                decode(idx, tuple);
                if (f.eval_homogeneous(tuple) != g.eval_homogeneous(tuple)) {
                    std::size_t cur = first_failure.load();
                    while (idx < cur && !first_failure.compare_exchange_weak(cur, idx)) {
                    }
                    return;
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
        }
    };

    const std::size_t workers =
        total < 512 ? 1 : std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 16);
    if (workers == 1) {
        sweep(0, total);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(sweep, total * w / workers, total * (w + 1) / workers);
        for (auto& t : pool)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);

    Verdict v;
    v.check = std::move(check);
    v.arity = f.arity();
    v.grid_D = grid.max_exponent;
    const std::size_t bad = first_failure.load();
    if (bad != kNoFailure) {
        std::vector<PolyForm> tuple(n);
        decode(bad, tuple);
        v.equal = false;
        v.lhs = f.eval_homogeneous(tuple);
        v.rhs = g.eval_homogeneous(tuple);
        v.witness = std::move(tuple);
    }
    return v;
}

Verdict is_zero_on_truncation(const MultiMap& f, TruncationGrid grid, std::string check)
{
    return maps_equal_on_truncation(f, MultiMap::zero(f.arity(), f.shifted_degree()), grid, std::move(check));
}

DefectResult ainfty_relation_defect(int n, int D, SignConvention conv)
{
    if (n < 1)
        throw std::invalid_argument("ainfty_relation_defect: n must be positive");
    // source side: sum over k, r of I_{n-k+1}(1^r ⊗ m_k ⊗ 1^t)
    MultiMap lhs = MultiMap::zero(n, 1);
    for (int k = 1; k <= n; ++k)
        for (int r = 0; r + k <= n; ++r)
            lhs = lhs + insert_source(iterated_integral_map(n - k + 1), r, k, conv);
    // target side: sum over compositions (n_1..n_k) of m_k(I_{n_1} ⊗ .. ⊗ I_{n_k})
    MultiMap rhs = MultiMap::zero(n, 1);
    for (const auto& comp : compositions(n)) {
        std::vector<MultiMap> factors;
        for (int len : comp.blocks)
            factors.push_back(iterated_integral_map(len));
        rhs = rhs + target_operation(factors, conv);
    }
    MultiMap defect = (lhs - rhs).renamed("A∞ defect n=" + std::to_string(n));
    Verdict v = is_zero_on_truncation(defect, TruncationGrid{D}, "ainfty_relation_defect");
    return {std::move(v), std::move(defect)};
}

}  // namespace bcum
