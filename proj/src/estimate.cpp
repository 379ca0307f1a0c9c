#include "graphdim/estimate.hpp"

#include "graphdim/errors.hpp"

#include <algorithm>

namespace graphdim {

EstimateResult estimate_sampled(const SampledFunction& f, FitWindow window) {
    if (window.k_max > f.m - 4) {
        throw EvalError("fit window k_max = " + std::to_string(window.k_max) +
                        " exceeds m - 4 = " + std::to_string(f.m - 4));
    }
    EstimateResult out;
    out.provenance = f.provenance;
    out.records = scan(f, std::min(4, window.k_min), f.m - 4);
    out.estimate = fit_dimension(out.records, window);
    return out;
}

EstimateResult estimate_expression(const ExprPtr& expr, const EstimateConfig& config) {
    return estimate_sampled(sample(expr, config.m), config.window);
}

} // namespace graphdim
