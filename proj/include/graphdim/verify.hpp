#pragma once

#include "graphdim/decompose.hpp"
#include "graphdim/estimate.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace graphdim {

/// Slack constants for the finite-scale inequality checks. These are
/// calibration values, not theorem constants; they are recorded in every
/// report so a failed margin is always interpretable.
struct Tolerances {
    double slope_slack = 0.05;       // additive slack on the bounding side
    double proxy_slack = 0.07;       // upper/lower proxy agreement
    double equality_separation = 0.2; // required dim gap for the product equality
    double sharpness_tol = 0.03;     // |est - 1| for the collapsed product
};

struct VerifyConfig {
    std::uint64_t seed = 42;
    int m = 22;
    std::optional<FitWindow> window; // defaults to [8, m-4]
    std::int64_t bilipschitz_pairs = 100000;
    Tolerances tol;

    FitWindow effective_window() const {
        return window.value_or(FitWindow{8, m - 4});
    }
    EstimateConfig estimate_config() const { return {m, effective_window()}; }
};

/// One asserted relation over one fixture. margin is the numeric slack by
/// which the relation held; negative means it failed by that much.
struct FixtureResult {
    std::string name;
    std::string relation;
    double margin = 0.0;
    bool pass = false;
    std::map<std::string, double> values; // estimates feeding the relation
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int grid_m = 0;
    FitWindow window;
    Tolerances tol;
    std::vector<FixtureResult> fixtures; // sorted by name
    bool pass = false;
    double elapsed_seconds = 0.0; // stdout only, never serialized
};

/// Canonical suite names, in run order.
const std::vector<std::string>& suite_names();

SuiteReport run_suite(const std::string& name, const VerifyConfig& config);

/// Every suite over the fixture matrix. Deterministic given (seed, m,
/// window); report ordering is canonical.
std::vector<SuiteReport> run_all(const VerifyConfig& config);

inline bool all_pass(const std::vector<SuiteReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass) return false;
    return true;
}

// Single checks over caller-supplied expressions (the suites apply these
// across the fixture matrix). Failures are recorded, not thrown.
FixtureResult check_product_upper(const ExprPtr& f, const ExprPtr& g, const VerifyConfig& config);
std::vector<FixtureResult> check_sum_upper(const ExprPtr& f, const ExprPtr& g,
                                           const VerifyConfig& config);
FixtureResult check_reciprocal_invariance(const ExprPtr& f, const VerifyConfig& config);
FixtureResult check_power_invariance(const ExprPtr& f, int n, const VerifyConfig& config);
FixtureResult check_product_equality(const ExprPtr& f, const ExprPtr& g,
                                     const VerifyConfig& config);
FixtureResult check_lower_product(const ExprPtr& f, const ExprPtr& g, const VerifyConfig& config);
FixtureResult check_polynomial_bound(const ExprPtr& poly, const std::vector<ExprPtr>& components,
                                     const std::string& name, const VerifyConfig& config);
FixtureResult check_rational_bound(const ExprPtr& numerator, const ExprPtr& denominator,
                                   const std::vector<ExprPtr>& components, const std::string& name,
                                   const VerifyConfig& config);

} // namespace graphdim
