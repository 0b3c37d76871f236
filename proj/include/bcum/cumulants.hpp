#pragma once

// Boolean cumulants of a chain map e between the interval dgas:
//   K_n(a_1..a_n) = sum over ordered partitions of n of
//                   (-1)^{blocks-1} e(block_1) ... e(block_k),
// where each block is the product of its consecutive inputs.

#include "bcum/interval_model.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace bcum {

struct Composition {
    std::vector<int> blocks;

    int n() const;
    int block_count() const { return static_cast<int>(blocks.size()); }
    /// Cut positions i in 1..n-1 (a cut between inputs i and i+1).
    std::vector<int> cuts() const;
    static Composition from_cuts(int n, const std::vector<int>& cuts);
    /// "(1,2)"
    std::string str() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// All 2^{n-1} compositions of n, ordered by the binary number of the cut set
/// (cut i is bit i-1): (3), (1,2), (2,1), (1,1,1) for n = 3. Throws on n < 1.
std::vector<Composition> compositions(int n);

/// (-1)^{blocks-1}
int composition_sign(const Composition& c);

class CumulantContext {
public:
    using ChainMap = std::function<Cochain(const PolyForm&)>;
    using SourceProduct = std::function<PolyForm(const PolyForm&, const PolyForm&)>;
    using TargetProduct = std::function<Cochain(const Cochain&, const Cochain&)>;

    /// Throws std::invalid_argument if chain_map fails to commute with the
    /// differentials on t^k and t^k dt, k <= check_degree.
    CumulantContext(ChainMap chain_map, SourceProduct source_product, TargetProduct target_product,
                    int check_degree = 6);

    Cochain map(const PolyForm& a) const { return chain_map_(a); }
    PolyForm source_product(const PolyForm& a, const PolyForm& b) const { return source_product_(a, b); }
    Cochain target_product(const Cochain& a, const Cochain& b) const { return target_product_(a, b); }

private:
    ChainMap chain_map_;
    SourceProduct source_product_;
    TargetProduct target_product_;
};

/// e = I with wedge and cup.
const CumulantContext& integration_context();
/// e(f + g dt) = (f(0), f(0); 0): a dga morphism, so every K_n with n >= 2 vanishes.
const CumulantContext& evaluation_context();

struct CumulantTerm {
    Composition composition;
    int sign;
    Cochain value;  // unsigned product e(block_1) ... e(block_k)
};

/// One term per composition, in compositions() order.
std::vector<CumulantTerm> cumulant_terms(const CumulantContext& ctx, std::span<const PolyForm> inputs);
Cochain cumulant(const CumulantContext& ctx, std::span<const PolyForm> inputs);
/// K_n(a_1..a_n) = K_{n-1}(a_1 a_2, a_3..a_n) - e(a_1) K_{n-1}(a_2..a_n), K_1 = e.
Cochain cumulant_recursive(const CumulantContext& ctx, std::span<const PolyForm> inputs);

/// The signed formula with the inputs named a, b, c, ...: "e(abc) - e(a)e(bc) - e(ab)e(c) + e(a)e(b)e(c)".
std::string cumulant_formula(int n);
/// Name of the i-th input (0-based): a, b, ..., z, then a27, a28, ...
std::string input_name(int i);

}  // namespace bcum
