#include "graphdim/fit.hpp"

#include "graphdim/errors.hpp"

#include <cmath>
#include <sstream>

namespace graphdim {

DimensionEstimate fit_dimension(const std::vector<ScaleRecord>& records, FitWindow window) {
    std::vector<double> ks, logs;
    for (const ScaleRecord& rec : records) {
        if (rec.k < window.k_min || rec.k > window.k_max) continue;
        ks.push_back(static_cast<double>(rec.k));
        logs.push_back(std::log2(static_cast<double>(rec.grid_count)));
    }
    if (ks.size() < 4) {
        std::ostringstream msg;
        msg << "fit window [" << window.k_min << "," << window.k_max << "] covers "
            << ks.size() << " scales; need at least 4";
        throw EvalError(msg.str());
    }

    DimensionEstimate est;
    est.window = window;
    for (std::size_t i = 0; i + 1 < logs.size(); ++i) {
        est.local_slopes.push_back(logs[i + 1] - logs[i]);
    }

    bool all_equal = true;
    for (double l : logs) all_equal = all_equal && (l == logs.front());
    if (all_equal) {
        est.degenerate = true;
        est.slope = 0.0;
        est.intercept = logs.front();
        est.r2 = 1.0;
        est.upper_proxy = est.lower_proxy = 0.0;
        return est;
    }

    const auto n = static_cast<double>(ks.size());
    double kbar = 0.0, lbar = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        kbar += ks[i];
        lbar += logs[i];
    }
    kbar /= n;
    lbar /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        sxx += (ks[i] - kbar) * (ks[i] - kbar);
        sxy += (ks[i] - kbar) * (logs[i] - lbar);
        syy += (logs[i] - lbar) * (logs[i] - lbar);
    }
    est.slope = sxy / sxx;
    est.intercept = lbar - est.slope * kbar;
    est.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    est.lower_proxy = est.local_slopes.front();
    est.upper_proxy = est.local_slopes.front();
    for (double s : est.local_slopes) {
        est.lower_proxy = std::min(est.lower_proxy, s);
        est.upper_proxy = std::max(est.upper_proxy, s);
    }
    if (!(est.lower_proxy <= est.slope + 1e-12 && est.slope <= est.upper_proxy + 1e-12)) {
        throw EvalError("local-slope envelope violated by fitted slope");
    }
    if (est.slope < 0.9 || est.slope > 2.1) {
        std::ostringstream msg;
        msg << "fitted slope " << format_double(est.slope)
            << " outside the [1,2] graph range (tolerance 0.1)";
        throw EvalError(msg.str());
    }
    return est;
}

} // namespace graphdim
