#include "graphdim/boxcount.hpp"

#include "graphdim/errors.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace graphdim {

namespace {

void check_scale(const SampledFunction& f, int k) {
    if (k < 1 || k > f.m - 4) {
        std::ostringstream msg;
        msg << "scale exponent k = " << k << " needs 1 <= k <= m - 4 = " << f.m - 4
            << " (>= 16 samples per column)";
        throw EvalError(msg.str());
    }
}

struct ColumnRange {
    double min_all, max_all;       // over the closed column
    double min_interior, max_interior; // right boundary sample excluded
};

// Closed-column sample range for column i at scale 2^-k.
ColumnRange column_range(const SampledFunction& f, int k, std::int64_t i) {
    const std::int64_t step = std::int64_t{1} << (f.m - k);
    const std::int64_t lo = i * step;
    const std::int64_t hi = lo + step;
    double mn = f.values[static_cast<std::size_t>(lo)];
    double mx = mn;
    for (std::int64_t j = lo + 1; j < hi; ++j) {
        const double v = f.values[static_cast<std::size_t>(j)];
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    const double edge = f.values[static_cast<std::size_t>(hi)];
    return {std::min(mn, edge), std::max(mx, edge), mn, mx};
}

} // namespace

OscillationScan oscillation_scan(const SampledFunction& f, int k) {
    check_scale(f, k);
    const std::int64_t cols = std::int64_t{1} << k;
    OscillationScan out;
    out.per_column.resize(static_cast<std::size_t>(cols));
    // fixed-order Neumaier summation: bit-identical regardless of scheduling
    double sum = 0.0, comp = 0.0;
    for (std::int64_t i = 0; i < cols; ++i) {
        const ColumnRange r = column_range(f, k, i);
        const double osc = r.max_all - r.min_all;
        out.per_column[static_cast<std::size_t>(i)] = osc;
        const double t = sum + osc;
        comp += (std::abs(sum) >= std::abs(osc)) ? (sum - t) + osc : (osc - t) + sum;
        sum = t;
    }
    out.osc_sum = sum + comp;
    return out;
}

std::int64_t grid_count(const SampledFunction& f, int k) {
    check_scale(f, k);
    const std::int64_t cols = std::int64_t{1} << k;
    const double delta = std::ldexp(1.0, -k);
    std::int64_t total = 0;
    for (std::int64_t i = 0; i < cols; ++i) {
        const ColumnRange r = column_range(f, k, i);
        const auto row_lo = static_cast<std::int64_t>(std::floor(r.min_all / delta));
        const auto row_hi = static_cast<std::int64_t>(std::floor(r.max_all / delta));
        std::int64_t boxes = row_hi - row_lo + 1;
        if (r.max_all > r.max_interior &&
            r.max_all / delta == std::floor(r.max_all / delta)) {
            --boxes;
        }
        total += boxes;
    }
    return total;
}

std::vector<ScaleRecord> scan(const SampledFunction& f, int k_min, int k_max) {
    if (k_min > k_max) throw EvalError("scan: empty scale window");
    if (k_min < 2) throw EvalError("scan: k_min must be >= 2");
    check_scale(f, k_max);
    std::vector<ScaleRecord> records;
    records.reserve(static_cast<std::size_t>(k_max - k_min + 1));
    for (int k = k_min; k <= k_max; ++k) {
        ScaleRecord rec;
        rec.k = k;
        rec.delta = std::ldexp(1.0, -k);
        rec.m_cols = std::int64_t{1} << k;
        rec.osc_sum = oscillation_scan(f, k).osc_sum;
        rec.grid_count = grid_count(f, k);
        rec.lower_bound = rec.osc_sum / rec.delta;
        rec.upper_bound = 2.0 * static_cast<double>(rec.m_cols) + rec.osc_sum / rec.delta;
        if (!(rec.lower_bound <= static_cast<double>(rec.grid_count) &&
              static_cast<double>(rec.grid_count) <= rec.upper_bound)) {
            std::ostringstream msg;
            msg << "oscillation sandwich violated for " << f.provenance << " at k = " << k
                << ": " << format_double(rec.lower_bound) << " <= " << rec.grid_count
                << " <= " << format_double(rec.upper_bound);
            throw EvalError(msg.str());
        }
        if (rec.grid_count < rec.m_cols) {
            throw EvalError("column lower bound violated at k = " + std::to_string(k));
        }
        records.push_back(rec);
    }
    return records;
}

} // namespace graphdim
