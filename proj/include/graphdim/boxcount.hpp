#pragma once

#include "graphdim/sampled.hpp"

#include <cstdint>
#include <vector>

namespace graphdim {

/// Per-scale record for the delta = 2^-k mesh. lower_bound and upper_bound
/// are the oscillation-sum sandwich around grid_count:
///   delta^-1 * osc_sum  <=  grid_count  <=  2 * m_cols + delta^-1 * osc_sum
struct ScaleRecord {
    int k = 0;              // scale exponent, delta = 2^-k
    double delta = 0.0;
    std::int64_t m_cols = 0; // number of mesh columns, 2^k
    double osc_sum = 0.0;    // sum of per-column oscillations
    std::int64_t grid_count = 0;
    double lower_bound = 0.0; // exact real, not rounded
    double upper_bound = 0.0;
};

struct OscillationScan {
    double osc_sum = 0.0;
    std::vector<double> per_column; // max - min over the closed column
};

/// Column oscillations at scale 2^-k. Columns are the closed intervals
/// [i 2^-k, (i+1) 2^-k]; both endpoint samples are included. Requires
/// k <= m - 4 (at least 16 samples per column).
OscillationScan oscillation_scan(const SampledFunction& f, int k);

/// Number of half-open delta-mesh squares met by the sampled graph at
/// delta = 2^-k. Counted per column from the closed-column sample range
/// (the graph approaches a column's right boundary from inside it), minus
/// one box when the column max is attained only at the right boundary
/// sample and lies exactly on a mesh row boundary: that point belongs to
/// the next column and the approach from the left stays in the row below.
std::int64_t grid_count(const SampledFunction& f, int k);

/// One ScaleRecord per k in [k_min, k_max], sorted by k. Asserts the
/// sandwich invariant and grid_count >= m_cols on every record.
std::vector<ScaleRecord> scan(const SampledFunction& f, int k_min, int k_max);

} // namespace graphdim
