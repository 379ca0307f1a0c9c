#include "graphdim/errors.hpp"
#include "graphdim/estimate.hpp"
#include "graphdim/parse.hpp"
#include "graphdim/report.hpp"
#include "graphdim/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace graphdim;

namespace {

py::dict fit_to_dict(const DimensionEstimate& est) {
    py::dict d;
    d["slope"] = est.slope;
    d["intercept"] = est.intercept;
    d["r2"] = est.r2;
    d["local_slopes"] = est.local_slopes;
    d["upper_proxy"] = est.upper_proxy;
    d["lower_proxy"] = est.lower_proxy;
    d["window"] = py::make_tuple(est.window.k_min, est.window.k_max);
    d["degenerate"] = est.degenerate;
    return d;
}

py::dict estimate_py(const std::string& spec, int m, int k_min, int k_max) {
    const EstimateResult result =
        estimate_expression(parse_expression(spec, m), EstimateConfig{m, FitWindow{k_min, k_max}});
    py::dict d = fit_to_dict(result.estimate);
    d["provenance"] = result.provenance;
    py::list scales;
    for (const ScaleRecord& r : result.records) {
        py::dict s;
        s["k"] = r.k;
        s["grid_count"] = r.grid_count;
        s["lower_bound"] = r.lower_bound;
        s["upper_bound"] = r.upper_bound;
        s["osc_sum"] = r.osc_sum;
        scales.append(s);
    }
    d["scales"] = scales;
    return d;
}

py::dict decompose_py(const std::string& spec, double beta, py::object alpha, int m) {
    const ExprPtr f = parse_expression(spec, m);
    const EstimateConfig cfg{m, FitWindow{6, std::min(16, m - 4)}};
    const DecompositionResult result =
        alpha.is_none() ? decompose_target(f, beta, cfg)
                        : decompose_two_targets(f, alpha.cast<double>(), beta, cfg);
    py::dict d;
    d["g"] = describe(result.g);
    d["h"] = describe(result.h);
    d["beta_target"] = result.beta_target;
    if (result.alpha_target) d["alpha_target"] = *result.alpha_target;
    d["est_f"] = fit_to_dict(result.est_f);
    d["est_g"] = fit_to_dict(result.est_g);
    d["est_h"] = fit_to_dict(result.est_h);
    d["recon_error"] = result.recon_error;
    return d;
}

py::tuple verify_py(const std::string& suite, std::uint64_t seed, int m) {
    VerifyConfig cfg;
    cfg.seed = seed;
    cfg.m = m;
    std::vector<SuiteReport> reports;
    if (suite == "all")
        reports = run_all(cfg);
    else
        reports.push_back(run_suite(suite, cfg));
    return py::make_tuple(all_pass(reports), to_json(reports).dump(2));
}

} // namespace

PYBIND11_MODULE(_graphdim, mod) {
    mod.doc() = "box-counting dimension estimation for graphs of functions on [0,1]";

    py::register_exception<ParseError>(mod, "ExpressionParseError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(mod, "InfeasibleError", PyExc_ValueError);
    py::register_exception<EvalError>(mod, "EvalError", PyExc_ArithmeticError);

    mod.def(
        "evaluate",
        [](const std::string& spec, double x, int m) {
            return eval(parse_expression(spec, m), x);
        },
        py::arg("spec"), py::arg("x"), py::arg("m") = 20,
        "Evaluate an expression at a point in [0,1].");

    mod.def(
        "sample",
        [](const std::string& spec, int m) {
            return sample(parse_expression(spec, m), m).values;
        },
        py::arg("spec"), py::arg("m") = 12,
        "Tabulate an expression on the dyadic grid i * 2^-m, i = 0..2^m.");

    mod.def("estimate", &estimate_py, py::arg("spec"), py::arg("m") = 20,
            py::arg("k_min") = 6, py::arg("k_max") = 16,
            "Box-count scan and least-squares dimension fit for an expression.");

    mod.def("decompose", &decompose_py, py::arg("spec"), py::arg("beta"),
            py::arg("alpha") = py::none(), py::arg("m") = 22,
            "Product decomposition f = g*h with prescribed factor dimensions.");

    mod.def("verify", &verify_py, py::arg("suite") = "all", py::arg("seed") = 42,
            py::arg("m") = 22,
            "Run verification suites; returns (all_passed, report_json).");

    mod.def("suite_names", [] { return suite_names(); },
            "Canonical verification suite names, in run order.");
}
