#pragma once

// Multilinear maps Omega^{⊗n} -> C* on the interval and the Hom-complex
// calculus on them.
//
// Degrees are tracked in the suspended convention: a map of unshifted degree
// |f| and arity n has shifted degree |f| + n - 1, so every I_n has shifted
// degree 0 and the differentials and products have shifted degree 1. A
// MultiMap always evaluates to the *unshifted* value; combinators that are
// defined in the shifted world (hom_boundary, insert_source,
// target_operation) conjugate by the suspension sign of the selected
// SignConvention before and after applying the Koszul rule.

#include "bcum/cumulants.hpp"
#include "bcum/interval_model.hpp"

#include <json.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcum {

enum class SignConvention {
    KoszulLeft,   // "A": (s^-1)^{⊗n} applied left to right, maps pass elements on their left
    KoszulRight,  // "B": the mirror rule, maps pass elements on their right
};

std::string_view convention_name(SignConvention c);
/// Accepts "A", "B", "koszul-left", "koszul-right".
SignConvention parse_convention(std::string_view text);

/// Sign relating the unshifted value f(a_1..a_n) and the shifted value
/// f'(s a_1 .. s a_n); `degrees` are the unshifted input degrees.
int suspension_sign(SignConvention conv, std::span<const int> degrees);

class MultiMap {
public:
    /// Called only with homogeneous, nonzero inputs of the right arity.
    using Evaluator = std::function<Cochain(std::span<const PolyForm>)>;

    MultiMap(int arity, int shifted_degree, Evaluator eval, std::string name = {});
    static MultiMap zero(int arity, int shifted_degree);

    int arity() const { return arity_; }
    int shifted_degree() const { return shifted_degree_; }
    /// Unshifted degree.
    int degree() const { return shifted_degree_ + 1 - arity_; }
    const std::string& name() const { return name_; }
    MultiMap renamed(std::string name) const;

    /// Multilinear extension: splits every input into homogeneous parts.
    Cochain operator()(std::span<const PolyForm> inputs) const;
    Cochain operator()(std::initializer_list<PolyForm> inputs) const
    {
        return (*this)(std::span<const PolyForm>(inputs.begin(), inputs.size()));
    }
    Cochain eval_homogeneous(std::span<const PolyForm> inputs) const { return (*eval_)(inputs); }

    friend MultiMap operator+(const MultiMap& f, const MultiMap& g);
    friend MultiMap operator-(const MultiMap& f, const MultiMap& g);
    friend MultiMap operator*(const Rational& s, const MultiMap& f);

private:
    int arity_;
    int shifted_degree_;
    std::shared_ptr<const Evaluator> eval_;
    std::string name_;
};

// ---- named maps ---------------------------------------------------------

/// I_n as a MultiMap (shifted degree 0).
MultiMap iterated_integral_map(int n);
/// (-1)^{(n-1)(n-2)/2} I_n: the n-th component written in the unshifted sign
/// convention, where the morphism equations take the form
///   dF_n = sum_r (-1)^r F_{n-1}(1^r ⊗ m ⊗ 1^t) - sum_i (-1)^{i-1} m(F_i ⊗ F_{n-i}).
MultiMap unshifted_component(int n);
/// K_n of the integration map as a MultiMap.
MultiMap cumulant_map(int n);

// ---- unshifted composites -------------------------------------------------

/// f(a_1, .., a_slot ∧ a_{slot+1}, ..).
MultiMap precompose_product(const MultiMap& f, int slot);
/// cup ∘ (f ⊗ g) with the Koszul sign of the convention.
MultiMap cup_maps(const MultiMap& f, const MultiMap& g, SignConvention conv);

// ---- shifted-world combinators ---------------------------------------------

/// ∂f = m1 ∘ f - (-1)^{|f|'} f ∘ (sum of m1 in each slot).
MultiMap hom_boundary(const MultiMap& f, SignConvention conv);
/// f ∘ (1^slot ⊗ m_k ⊗ 1^rest) with the source operation m_k (m_1 = d,
/// m_2 = wedge, m_k = 0 for k >= 3).
MultiMap insert_source(const MultiMap& f, int slot, int k, SignConvention conv);
/// m_k ∘ (f_1 ⊗ .. ⊗ f_k) with the target operation m_k (m_1 = delta,
/// m_2 = cup, m_k = 0 for k >= 3).
MultiMap target_operation(std::span<const MultiMap> factors, SignConvention conv);

// ---- homotopies -----------------------------------------------------------

/// H_2 = I_2, H_n = H_{n-1} ∘ (wedge ⊗ 1..) - cup ∘ (I ⊗ H_{n-1}); ∂H_n = K_n.
MultiMap homotopy_witness(int n, SignConvention conv);

enum class WitnessVariant { Left, Right };
/// "left" or "right"; throws std::invalid_argument otherwise.
WitnessVariant parse_witness_variant(std::string_view text);
/// left: p2(ab,c) - p1(a)p2(b,c);  right: p2(a,bc) - p2(a,b)p1(c).
MultiMap alternate_witness_k3(WitnessVariant variant, SignConvention conv);
/// left - right = p2(ab,c) - p1(a)p2(b,c) - p2(a,bc) + p2(a,b)p1(c).
MultiMap square_cycle(SignConvention conv);

// ---- certification on truncated bases -------------------------------------

struct TruncationGrid {
    int max_exponent = 4;

    /// t^0..t^D followed by dt, t dt, .., t^D dt.
    std::vector<PolyForm> basis() const;
    std::size_t slot_size() const { return 2 * static_cast<std::size_t>(max_exponent + 1); }
};

struct Verdict {
    std::string check;
    int arity = 0;
    int grid_D = 0;
    bool equal = true;
    std::optional<std::vector<PolyForm>> witness;
    std::optional<Cochain> lhs;
    std::optional<Cochain> rhs;

    nlohmann::json to_json() const;
};

/// Compares f and g on every tuple of basis elements, in lexicographic order
/// of basis indices; reports the first differing tuple. By multilinearity an
/// "equal" verdict certifies equality on the span of the truncated basis.
/// Throws std::invalid_argument on arity mismatch.
Verdict maps_equal_on_truncation(const MultiMap& f, const MultiMap& g, TruncationGrid grid,
                                 std::string check = "maps_equal");
Verdict is_zero_on_truncation(const MultiMap& f, TruncationGrid grid, std::string check = "is_zero");

struct DefectResult {
    Verdict verdict;
    MultiMap defect;
};

/// sum p_{n-k+1}(1^r ⊗ m_k ⊗ 1^t) - sum m_k(p_{n_1} ⊗ .. ⊗ p_{n_k}) for the
/// family (I, I_2, .., I_n), assembled in the shifted world and tested
/// against zero on the grid.
DefectResult ainfty_relation_defect(int n, int D, SignConvention conv);

}  // namespace bcum
