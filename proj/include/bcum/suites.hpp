#pragma once

// Verification suites behind `bcum verify` and the JSON report they produce.

#include "bcum/hom_complex.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcum {

inline constexpr std::string_view kVersion = "1.0.0";

/// Out-of-range parameters and other caller mistakes.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ReportEntry {
    std::string check;
    std::vector<std::pair<std::string, std::string>> parameters;
    bool passed = false;
    std::optional<nlohmann::json> witness;
    long duration_ms = 0;

    nlohmann::json to_json() const;
};

struct Report {
    SignConvention convention = SignConvention::KoszulLeft;
    std::vector<ReportEntry> entries;

    bool all_passed() const;
    /// By check name, then parameters (numeric values compare as numbers).
    void sort();
    /// {version, convention, entries}
    nlohmann::json to_json() const;
};

enum class Suite { Dga, ChainMap, Cumulants, Ainfty, Cube, Formal, All };

Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct SuiteOptions {
    int n_max = 3;
    int degree = 4;
    SignConvention convention = SignConvention::KoszulLeft;
};

/// n_max <= 6 for cube and cumulants, <= 4 for ainfty, formal and all;
/// 0 <= degree <= 12. Throws UsageError.
void validate(Suite s, const SuiteOptions& opt);

/// Grid used for the expensive per-cell and cross-layer sweeps: min(degree, 3).
int reduced_degree(const SuiteOptions& opt);
/// Exponent bound of the cumulant tuple sweeps for n inputs.
int cumulant_sweep_exponent(int n, int degree);

/// Runs the suite and returns the sorted report. Validates first.
Report run_suite(Suite s, const SuiteOptions& opt);

}  // namespace bcum
