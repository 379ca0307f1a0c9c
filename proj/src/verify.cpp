#include "graphdim/verify.hpp"

#include "graphdim/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_map>

namespace graphdim {

namespace {

// Estimate cache keyed by expression description; fixtures recur across
// suites and sampling dominates the runtime.
class Estimator {
public:
    explicit Estimator(const VerifyConfig& config) : config_(config) {}

    const DimensionEstimate& operator()(const ExprPtr& expr) {
        const std::string key = describe(expr);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, estimate_expression(expr, config_.estimate_config()).estimate)
                     .first;
        }
        return it->second;
    }

    const VerifyConfig& config() const { return config_; }

private:
    VerifyConfig config_;
    std::unordered_map<std::string, DimensionEstimate> cache_;
};

FixtureResult upper_bound_result(std::string name, const std::string& kind, double bound_est,
                                 double combined_est, const Tolerances& tol) {
    FixtureResult r;
    r.name = std::move(name);
    r.relation = "est(" + kind + ") <= max(component estimates) + slope_slack";
    r.margin = bound_est + tol.slope_slack - combined_est;
    r.pass = r.margin >= 0.0;
    return r;
}

FixtureResult product_upper_impl(Estimator& est, const ExprPtr& f, const ExprPtr& g,
                                 const std::string& name) {
    const double ef = est(f).slope;
    const double eg = est(g).slope;
    const double efg = est(make_product(f, g)).slope;
    FixtureResult r = upper_bound_result(name, "f*g", std::max(ef, eg), efg,
                                         est.config().tol);
    r.values = {{"est_f", ef}, {"est_g", eg}, {"est_fg", efg}};
    return r;
}

std::vector<FixtureResult> sum_upper_impl(Estimator& est, const ExprPtr& f, const ExprPtr& g,
                                          const std::string& name) {
    const DimensionEstimate& df = est(f);
    const DimensionEstimate& dg = est(g);
    const DimensionEstimate& ds = est(make_sum(f, g));
    const Tolerances& tol = est.config().tol;

    FixtureResult upper =
        upper_bound_result(name + "/upper", "f+g", std::max(df.slope, dg.slope), ds.slope, tol);
    upper.values = {{"est_f", df.slope}, {"est_g", dg.slope}, {"est_sum", ds.slope}};

    FixtureResult lower;
    lower.name = name + "/lower";
    lower.relation = "lower_proxy(f+g) <= max(lower_proxy(f), upper_proxy(g)) + slope_slack";
    const double bound = std::max(df.lower_proxy, dg.upper_proxy);
    lower.margin = bound + tol.slope_slack - ds.lower_proxy;
    lower.pass = lower.margin >= 0.0;
    lower.values = {{"lower_proxy_f", df.lower_proxy},
                    {"upper_proxy_g", dg.upper_proxy},
                    {"lower_proxy_sum", ds.lower_proxy}};
    return {std::move(upper), std::move(lower)};
}

FixtureResult reciprocal_impl(Estimator& est, const ExprPtr& f, const std::string& name) {
    const DimensionEstimate& df = est(f);
    const DimensionEstimate& dr = est(make_reciprocal(f));
    const Tolerances& tol = est.config().tol;
    FixtureResult r;
    r.name = name;
    r.relation = "|est(f) - est(1/f)| <= slope_slack and proxies agree within proxy_slack";
    const double slope_gap = std::abs(df.slope - dr.slope);
    const double up_gap = std::abs(df.upper_proxy - dr.upper_proxy);
    const double lo_gap = std::abs(df.lower_proxy - dr.lower_proxy);
    r.margin = std::min({tol.slope_slack - slope_gap, tol.proxy_slack - up_gap,
                         tol.proxy_slack - lo_gap});
    r.pass = r.margin >= 0.0;
    r.values = {{"est_f", df.slope},
                {"est_recip", dr.slope},
                {"upper_proxy_f", df.upper_proxy},
                {"upper_proxy_recip", dr.upper_proxy},
                {"lower_proxy_f", df.lower_proxy},
                {"lower_proxy_recip", dr.lower_proxy}};
    return r;
}

FixtureResult power_impl(Estimator& est, const ExprPtr& f, int n, const std::string& name) {
    const double ef = est(f).slope;
    const double ep = est(make_power(f, n)).slope;
    FixtureResult r;
    r.name = name;
    r.relation = "|est(f^" + std::to_string(n) + ") - est(f)| <= slope_slack";
    r.margin = est.config().tol.slope_slack - std::abs(ef - ep);
    r.pass = r.margin >= 0.0;
    r.values = {{"est_f", ef}, {"est_power", ep}, {"n", static_cast<double>(n)}};
    return r;
}

FixtureResult product_equality_impl(Estimator& est, const ExprPtr& f, const ExprPtr& g,
                                    const std::string& name) {
    const Tolerances& tol = est.config().tol;
    const double ef = est(f).slope;
    const double eg = est(g).slope;
    FixtureResult r;
    r.name = name;
    if (std::abs(ef - eg) < tol.equality_separation) {
        r.relation = "precondition |est(f) - est(g)| >= equality_separation";
        r.margin = std::abs(ef - eg) - tol.equality_separation;
        r.pass = false;
        r.values = {{"est_f", ef}, {"est_g", eg}};
        return r;
    }
    const double efg = est(make_product(f, g)).slope;
    r.relation = "|est(f*g) - max(est(f), est(g))| <= proxy_slack";
    r.margin = tol.proxy_slack - std::abs(efg - std::max(ef, eg));
    r.pass = r.margin >= 0.0;
    r.values = {{"est_f", ef}, {"est_g", eg}, {"est_fg", efg}};
    return r;
}

FixtureResult sharpness_impl(Estimator& est, const ExprPtr& f, const std::string& name) {
    // f and 1/f share a dimension, violating the equality hypothesis, and
    // the product collapses to the constant 1.
    const double ef = est(f).slope;
    const double er = est(make_reciprocal(f)).slope;
    const double efg = est(make_product(f, make_reciprocal(f))).slope;
    FixtureResult r;
    r.name = name;
    r.relation = "est(f * 1/f) = 1 within sharpness_tol (equal-dimension hypothesis violated)";
    r.margin = est.config().tol.sharpness_tol - std::abs(efg - 1.0);
    r.pass = r.margin >= 0.0;
    r.values = {{"est_f", ef}, {"est_recip", er}, {"est_fg", efg}};
    return r;
}

FixtureResult lower_product_impl(Estimator& est, const ExprPtr& f, const ExprPtr& g,
                                 const std::string& name) {
    const DimensionEstimate& df = est(f);
    const DimensionEstimate& dg = est(g);
    const DimensionEstimate& dp = est(make_product(f, g));
    FixtureResult r;
    r.name = name;
    r.relation = "lower_proxy(f*g) <= max(lower_proxy(f), upper_proxy(g)) + slope_slack";
    const double bound = std::max(df.lower_proxy, dg.upper_proxy);
    r.margin = bound + est.config().tol.slope_slack - dp.lower_proxy;
    r.pass = r.margin >= 0.0;
    r.values = {{"lower_proxy_f", df.lower_proxy},
                {"upper_proxy_g", dg.upper_proxy},
                {"lower_proxy_fg", dp.lower_proxy}};
    return r;
}

FixtureResult polynomial_impl(Estimator& est, const ExprPtr& poly,
                              const std::vector<ExprPtr>& components, const std::string& name) {
    double bound = 1.0; // a polynomial over graphs is itself a graph
    FixtureResult r;
    r.name = name;
    std::size_t idx = 0;
    for (const ExprPtr& c : components) {
        const double e = est(c).slope;
        bound = std::max(bound, e);
        r.values["est_f" + std::to_string(++idx)] = e;
    }
    const double ep = est(poly).slope;
    r.relation = "est(P(f_1..f_n)) <= max(est(f_i)) + slope_slack";
    r.margin = bound + est.config().tol.slope_slack - ep;
    r.pass = r.margin >= 0.0;
    r.values["est_poly"] = ep;
    return r;
}

FixtureResult rational_impl(Estimator& est, const ExprPtr& numerator, const ExprPtr& denominator,
                            const std::vector<ExprPtr>& components, const std::string& name) {
    // denominator must be bounded away from zero on the grid
    require_zero_free(sample(denominator, est.config().m));
    FixtureResult r =
        polynomial_impl(est, make_product(numerator, make_reciprocal(denominator)), components,
                        name);
    r.relation = "est(P/Q) <= max(est(f_i)) + slope_slack";
    return r;
}

FixtureResult bilipschitz_impl(const VerifyConfig& config, const ExprPtr& f, MapKind kind,
                               const std::string& name) {
    const SampledFunction sf = sample(f, config.m);
    const BiLipschitzReport report =
        bilipschitz_verify(sf, kind, config.bilipschitz_pairs,
                           config.seed ^ std::hash<std::string>{}(name));
    FixtureResult r;
    r.name = name;
    r.relation = kind == MapKind::reciprocal
                     ? "C2^-1 d^2 <= d'^2 <= C1 d^2 for all sampled pairs"
                     : "C4^-1 d^2 <= d''^2 <= C3 d^2 for all sampled pairs";
    r.margin = report.violations == 0 ? 0.0 : -static_cast<double>(report.violations);
    r.pass = report.violations == 0;
    r.values = {{"m1", report.m1},
                {"m2", report.m2},
                {"violations", static_cast<double>(report.violations)},
                {"pairs", static_cast<double>(report.pairs_tested)}};
    return r;
}

// ---------------------------------------------------------------------------
// fixture matrix

struct Fixtures {
    ExprPtr w13, w15, w17;     // shifted Weierstrass-type, dims 1.3 / 1.5 / 1.7
    ExprPtr w15_raw;           // unshifted series behind w15
    double w15_shift = 0.0;
    ExprPtr lin, lin11, takagi, peano;
    ExprPtr const0, const2;

    explicit Fixtures(int m) {
        w13 = dimension_fixture(1.3, m);
        w15 = dimension_fixture(1.5, m);
        w17 = dimension_fixture(1.7, m);
        const auto& shift = std::get<Shift>(w15->node);
        w15_raw = shift.inner;
        w15_shift = shift.offset;
        lin = make_linear(1.0, 0.0);
        lin11 = make_linear(1.0, 1.0);
        takagi = make_takagi(default_takagi_terms(m));
        peano = make_peano_x(default_peano_digits(m));
        const0 = make_constant(0.0);
        const2 = make_constant(2.0);
    }
};

using SuiteBody = void (*)(Estimator&, const Fixtures&, std::vector<FixtureResult>&);

void suite_product_upper(Estimator& est, const Fixtures& fx, std::vector<FixtureResult>& out) {
    out.push_back(product_upper_impl(est, fx.const0, fx.peano, "const0*peano_x"));
    out.push_back(product_upper_impl(est, fx.lin, fx.lin, "x*x"));
    out.push_back(product_upper_impl(est, fx.w17, fx.w13, "w17*w13"));
}

void suite_sum_upper(Estimator& est, const Fixtures& fx, std::vector<FixtureResult>& out) {
    // cancellation: g = 1 - (w15 - shift), so w15 + g is constant
    ExprPtr g = make_shift(make_product(make_constant(-1.0), fx.w15_raw), 1.0);
    for (auto& r : sum_upper_impl(est, fx.w15, g, "w15+cancel")) out.push_back(std::move(r));
    for (auto& r : sum_upper_impl(est, fx.lin, fx.takagi, "x+takagi")) out.push_back(std::move(r));
    for (auto& r : sum_upper_impl(est, fx.lin, fx.lin, "x+x")) out.push_back(std::move(r));
}

void suite_reciprocal(Estimator& est, const Fixtures& fx, std::vector<FixtureResult>& out) {
    out.push_back(reciprocal_impl(est, fx.w13, "recip(w13)"));
    out.push_back(reciprocal_impl(est, fx.w15, "recip(w15)"));
    out.push_back(reciprocal_impl(est, fx.w17, "recip(w17)"));
}

void suite_power(Estimator& est, const Fixtures& fx, std::vector<FixtureResult>& out) {
    out.push_back(power_impl(est, fx.lin11, 1, "(x+1)^1"));
    out.push_back(power_impl(est, fx.w13, 2, "w13^2"));
    out.push_back(power_impl(est, fx.w15, 2, "w15^2"));
    out.push_back(power_impl(est, fx.w17, 2, "w17^2"));
    out.push_back(power_impl(est, fx.const2, 3, "2^3"));
}

void suite_product_equality(Estimator& est, const Fixtures& fx, std::vector<FixtureResult>& out) {
    out.push_back(product_equality_impl(est, fx.w17, fx.w13, "w17*w13"));
    out.push_back(product_equality_impl(est, fx.w15, fx.const2, "w15*const2"));
    out.push_back(sharpness_impl(est, fx.w15, "sharpness:w15*recip(w15)"));
}

void suite_lower_product(Estimator& est, const Fixtures& fx, std::vector<FixtureResult>& out) {
    out.push_back(lower_product_impl(est, fx.const0, fx.peano, "const0*peano_x"));
    out.push_back(lower_product_impl(est, fx.lin, fx.lin, "x*x"));
    out.push_back(lower_product_impl(est, fx.w17, fx.w13, "w17*w13"));
}

void suite_polynomial(Estimator& est, const Fixtures& fx, std::vector<FixtureResult>& out) {
    const ExprPtr& f = fx.w15;
    const ExprPtr& g = fx.w13;
    out.push_back(polynomial_impl(est, make_sum(f, g), {f, g}, "P=f+g"));
    // f^2 g + 3 f g - g^3
    ExprPtr p = make_sum(make_product(make_power(f, 2), g),
                         make_sum(make_product(make_constant(3.0), make_product(f, g)),
                                  make_product(make_constant(-1.0), make_power(g, 3))));
    out.push_back(polynomial_impl(est, p, {f, g}, "P=f^2*g+3*f*g-g^3"));
    out.push_back(polynomial_impl(est, make_constant(7.0), {f, g}, "P=7"));
    // three-function generalization
    ExprPtr q = make_sum(make_product(fx.w13, fx.lin), make_power(fx.takagi, 2));
    out.push_back(
        polynomial_impl(est, q, {fx.w13, fx.lin, fx.takagi}, "P=f1*f2+f3^2"));
}

void suite_rational(Estimator& est, const Fixtures& fx, std::vector<FixtureResult>& out) {
    const ExprPtr& f = fx.w15;
    const ExprPtr& g = fx.w13;
    out.push_back(rational_impl(est, f, f, {f}, "R=f/f"));
    ExprPtr num = make_sum(make_power(f, 2), g);
    ExprPtr den = make_shift(make_power(g, 2), 1.0);
    out.push_back(rational_impl(est, num, den, {f, g}, "R=(f^2+g)/(1+g^2)"));
    // guard: a denominator with a grid zero must be rejected
    FixtureResult guard;
    guard.name = "R=f/(x-0.5):guard";
    guard.relation = "denominator with a grid zero raises a zero-crossing error";
    try {
        rational_impl(est, f, make_linear(1.0, -0.5), {f}, guard.name);
        guard.pass = false;
        guard.margin = -1.0;
    } catch (const ZeroCrossingError&) {
        guard.pass = true;
        guard.margin = 0.0;
    }
    out.push_back(std::move(guard));
}

void suite_bilipschitz(Estimator& est, const Fixtures& fx, std::vector<FixtureResult>& out) {
    const VerifyConfig& config = est.config();
    const std::vector<std::pair<std::string, ExprPtr>> targets = {
        {"w13", fx.w13}, {"w15", fx.w15}, {"w17", fx.w17}};
    for (const auto& [name, f] : targets) {
        out.push_back(bilipschitz_impl(config, f, MapKind::reciprocal, name + ":reciprocal"));
        out.push_back(bilipschitz_impl(config, f, MapKind::square, name + ":square"));
    }
}

const std::vector<std::pair<std::string, SuiteBody>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteBody>> table = {
        {"product_upper", suite_product_upper},
        {"sum_upper", suite_sum_upper},
        {"reciprocal", suite_reciprocal},
        {"power", suite_power},
        {"product_equality", suite_product_equality},
        {"lower_product", suite_lower_product},
        {"polynomial", suite_polynomial},
        {"rational", suite_rational},
        {"bilipschitz", suite_bilipschitz},
    };
    return table;
}

SuiteReport run_body(const std::string& name, SuiteBody body, const VerifyConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    Estimator est(config);
    Fixtures fx(config.m);
    SuiteReport report;
    report.suite = name;
    report.seed = config.seed;
    report.grid_m = config.m;
    report.window = config.effective_window();
    report.tol = config.tol;
    body(est, fx, report.fixtures);
    std::sort(report.fixtures.begin(), report.fixtures.end(),
              [](const FixtureResult& a, const FixtureResult& b) { return a.name < b.name; });
    report.pass = std::all_of(report.fixtures.begin(), report.fixtures.end(),
                              [](const FixtureResult& r) { return r.pass; });
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, body] : suite_table()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const VerifyConfig& config) {
    for (const auto& [suite, body] : suite_table()) {
        if (suite == name) return run_body(name, body, config);
    }
    throw EvalError("unknown suite '" + name + "'");
}

std::vector<SuiteReport> run_all(const VerifyConfig& config) {
    std::vector<SuiteReport> out;
    for (const auto& [name, body] : suite_table()) out.push_back(run_body(name, body, config));
    return out;
}

FixtureResult check_product_upper(const ExprPtr& f, const ExprPtr& g, const VerifyConfig& config) {
    Estimator est(config);
    return product_upper_impl(est, f, g, "product_upper");
}

std::vector<FixtureResult> check_sum_upper(const ExprPtr& f, const ExprPtr& g,
                                           const VerifyConfig& config) {
    Estimator est(config);
    return sum_upper_impl(est, f, g, "sum_upper");
}

FixtureResult check_reciprocal_invariance(const ExprPtr& f, const VerifyConfig& config) {
    Estimator est(config);
    return reciprocal_impl(est, f, "reciprocal_invariance");
}

FixtureResult check_power_invariance(const ExprPtr& f, int n, const VerifyConfig& config) {
    Estimator est(config);
    return power_impl(est, f, n, "power_invariance");
}

FixtureResult check_product_equality(const ExprPtr& f, const ExprPtr& g,
                                     const VerifyConfig& config) {
    Estimator est(config);
    return product_equality_impl(est, f, g, "product_equality");
}

FixtureResult check_lower_product(const ExprPtr& f, const ExprPtr& g, const VerifyConfig& config) {
    Estimator est(config);
    return lower_product_impl(est, f, g, "lower_product");
}

FixtureResult check_polynomial_bound(const ExprPtr& poly, const std::vector<ExprPtr>& components,
                                     const std::string& name, const VerifyConfig& config) {
    Estimator est(config);
    return polynomial_impl(est, poly, components, name);
}

FixtureResult check_rational_bound(const ExprPtr& numerator, const ExprPtr& denominator,
                                   const std::vector<ExprPtr>& components, const std::string& name,
                                   const VerifyConfig& config) {
    Estimator est(config);
    return rational_impl(est, numerator, denominator, components, name);
}

} // namespace graphdim
