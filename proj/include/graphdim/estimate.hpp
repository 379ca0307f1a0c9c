#pragma once

#include "graphdim/boxcount.hpp"
#include "graphdim/expr.hpp"
#include "graphdim/fit.hpp"

namespace graphdim {

struct EstimateConfig {
    int m = 20;
    FitWindow window{6, 16};
};

struct EstimateResult {
    std::vector<ScaleRecord> records;
    DimensionEstimate estimate;
    std::string provenance;
};

/// sample + scan + fit in one step. Scans [min(4, window.k_min), m-4] so the
/// records cover the window with room for diagnostics.
EstimateResult estimate_expression(const ExprPtr& expr, const EstimateConfig& config);

/// scan + fit for an already sampled function.
EstimateResult estimate_sampled(const SampledFunction& f, FitWindow window);

} // namespace graphdim
