#pragma once

#include "graphdim/decompose.hpp"
#include "graphdim/verify.hpp"

#include <json.hpp>

#include <iosfwd>

namespace graphdim {

using json = nlohmann::json;

json to_json(const FitWindow& window);
json to_json(const DimensionEstimate& est);
json to_json(const std::vector<ScaleRecord>& records);
json to_json(const EstimateResult& result);
json to_json(const DecompositionResult& result);
json to_json(const BiLipschitzReport& report);
json to_json(const FixtureResult& result);
/// elapsed_seconds is deliberately excluded so repeat runs are byte-identical.
json to_json(const SuiteReport& report);
json to_json(const std::vector<SuiteReport>& reports);

/// CSV with header k,delta,osc_sum,grid_count,lower_bound,upper_bound.
void write_scan_csv(std::ostream& out, const std::vector<ScaleRecord>& records);

/// Human-readable fixture table for one suite.
void print_suite_table(std::ostream& out, const SuiteReport& report);

/// Log-log box-count plot: points (k, log2 N), the fitted line, and local
/// slopes, as a standalone SVG document.
std::string render_scan_svg(const std::vector<ScaleRecord>& records,
                            const DimensionEstimate& est, const std::string& title);

} // namespace graphdim
