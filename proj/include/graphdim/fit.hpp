#pragma once

#include "graphdim/boxcount.hpp"

#include <vector>

namespace graphdim {

struct FitWindow {
    int k_min = 6;
    int k_max = 16;

    bool operator==(const FitWindow&) const = default;
};

/// OLS fit of log2(grid_count) against k over the fit window, with
/// per-adjacent-scale local slopes and their window min/max as finite-scale
/// stand-ins for the lower/upper box dimension.
struct DimensionEstimate {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::vector<double> local_slopes; // log2 N_{k+1} - log2 N_k
    double upper_proxy = 0.0;         // max local slope over the window
    double lower_proxy = 0.0;         // min local slope over the window
    FitWindow window;
    bool degenerate = false; // all counts equal; slope forced to 0
};

/// Requires >= 4 records inside the window. The estimate satisfies
/// lower_proxy <= slope <= upper_proxy (the OLS slope over consecutive
/// scales is a positive weighted average of the local slopes) and, for
/// graphs, slope in [0.9, 2.1].
DimensionEstimate fit_dimension(const std::vector<ScaleRecord>& records, FitWindow window);

} // namespace graphdim
