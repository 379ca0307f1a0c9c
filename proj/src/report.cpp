#include "graphdim/report.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace graphdim {

json to_json(const FitWindow& window) {
    return json{{"k_min", window.k_min}, {"k_max", window.k_max}};
}

json to_json(const DimensionEstimate& est) {
    return json{{"slope", est.slope},
                {"intercept", est.intercept},
                {"r2", est.r2},
                {"local_slopes", est.local_slopes},
                {"upper_proxy", est.upper_proxy},
                {"lower_proxy", est.lower_proxy},
                {"window", to_json(est.window)},
                {"degenerate", est.degenerate}};
}

json to_json(const std::vector<ScaleRecord>& records) {
    json arr = json::array();
    for (const ScaleRecord& r : records) {
        arr.push_back(json{{"k", r.k},
                           {"delta", r.delta},
                           {"m_cols", r.m_cols},
                           {"osc_sum", r.osc_sum},
                           {"grid_count", r.grid_count},
                           {"lower_bound", r.lower_bound},
                           {"upper_bound", r.upper_bound}});
    }
    return arr;
}

json to_json(const EstimateResult& result) {
    return json{{"provenance", result.provenance},
                {"scales", to_json(result.records)},
                {"fit", to_json(result.estimate)}};
}

json to_json(const DecompositionResult& result) {
    json out{{"g", describe(result.g)},
             {"h", describe(result.h)},
             {"beta_target", result.beta_target},
             {"est_f", to_json(result.est_f)},
             {"est_g", to_json(result.est_g)},
             {"est_h", to_json(result.est_h)},
             {"recon_error", result.recon_error}};
    if (result.alpha_target) out["alpha_target"] = *result.alpha_target;
    return out;
}

json to_json(const BiLipschitzReport& report) {
    return json{{"map_kind", report.map_kind == MapKind::reciprocal ? "reciprocal" : "square"},
                {"m1", report.m1},
                {"m2", report.m2},
                {"c1", report.c1},
                {"c2", report.c2},
                {"c3", report.c3},
                {"c4", report.c4},
                {"violations", report.violations},
                {"pairs_tested", report.pairs_tested}};
}

json to_json(const FixtureResult& result) {
    return json{{"name", result.name},
                {"relation", result.relation},
                {"margin", result.margin},
                {"pass", result.pass},
                {"values", result.values}};
}

json to_json(const SuiteReport& report) {
    json fixtures = json::array();
    for (const FixtureResult& r : report.fixtures) fixtures.push_back(to_json(r));
    return json{{"suite", report.suite},
                {"seed", report.seed},
                {"grid_m", report.grid_m},
                {"window", to_json(report.window)},
                {"tolerances",
                 json{{"slope_slack", report.tol.slope_slack},
                      {"proxy_slack", report.tol.proxy_slack},
                      {"equality_separation", report.tol.equality_separation},
                      {"sharpness_tol", report.tol.sharpness_tol}}},
                {"fixtures", fixtures},
                {"pass", report.pass}};
}

json to_json(const std::vector<SuiteReport>& reports) {
    json arr = json::array();
    for (const SuiteReport& r : reports) arr.push_back(to_json(r));
    return arr;
}

void write_scan_csv(std::ostream& out, const std::vector<ScaleRecord>& records) {
    out << "k,delta,osc_sum,grid_count,lower_bound,upper_bound\n";
    for (const ScaleRecord& r : records) {
        out << r.k << ',' << format_double(r.delta) << ',' << format_double(r.osc_sum) << ','
            << r.grid_count << ',' << format_double(r.lower_bound) << ','
            << format_double(r.upper_bound) << '\n';
    }
}

void print_suite_table(std::ostream& out, const SuiteReport& report) {
    out << "suite " << report.suite << " (m=" << report.grid_m << ", window ["
        << report.window.k_min << "," << report.window.k_max << "], seed " << report.seed
        << ", " << std::fixed << std::setprecision(1) << report.elapsed_seconds << "s)\n"
        << std::defaultfloat << std::setprecision(6);
    for (const FixtureResult& r : report.fixtures) {
        out << "  [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << "  margin="
            << std::showpos << r.margin << std::noshowpos << "\n";
    }
    out << "  => " << (report.pass ? "PASS" : "FAIL") << "\n";
}

namespace {

double nice_round(double v) { return std::round(v * 1000.0) / 1000.0; }

} // namespace

std::string render_scan_svg(const std::vector<ScaleRecord>& records,
                            const DimensionEstimate& est, const std::string& title) {
    constexpr double width = 640, height = 480;
    constexpr double ml = 60, mr = 20, mt = 40, mb = 50;
    double kmin = records.front().k, kmax = records.back().k;
    double ymin = std::log2(static_cast<double>(records.front().grid_count));
    double ymax = ymin;
    for (const ScaleRecord& r : records) {
        const double y = std::log2(static_cast<double>(r.grid_count));
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (ymax == ymin) ymax = ymin + 1.0;
    const auto px = [&](double k) {
        return ml + (k - kmin) / (kmax - kmin) * (width - ml - mr);
    };
    const auto py = [&](double y) {
        return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\">" << title
        << " (slope = " << nice_round(est.slope) << ")</text>\n";
    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">k = -log2 "
           "delta</text>\n"
        << "<text x=\"16\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
           "transform=\"rotate(-90 16 "
        << height / 2 << ")\">log2 N</text>\n";
    // fitted line over the fit window
    const double x0 = est.window.k_min, x1 = est.window.k_max;
    svg << "<line x1=\"" << px(x0) << "\" y1=\"" << py(est.slope * x0 + est.intercept)
        << "\" x2=\"" << px(x1) << "\" y2=\"" << py(est.slope * x1 + est.intercept)
        << "\" stroke=\"#c22\" stroke-width=\"1.5\"/>\n";
    // points and local-slope labels
    for (std::size_t i = 0; i < records.size(); ++i) {
        const ScaleRecord& r = records[i];
        const double y = std::log2(static_cast<double>(r.grid_count));
        svg << "<circle cx=\"" << px(r.k) << "\" cy=\"" << py(y)
            << "\" r=\"3\" fill=\"#224\"/>\n";
        if (i + 1 < records.size()) {
            const double local =
                std::log2(static_cast<double>(records[i + 1].grid_count)) - y;
            svg << "<text x=\"" << (px(r.k) + px(records[i + 1].k)) / 2 << "\" y=\""
                << py(y) - 8 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                << "font-size=\"9\" fill=\"#666\">" << nice_round(local) << "</text>\n";
        }
        svg << "<text x=\"" << px(r.k) << "\" y=\"" << height - mb + 16
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << r.k
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace graphdim
