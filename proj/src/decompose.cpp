#include "graphdim/decompose.hpp"

#include "graphdim/errors.hpp"

#include <cmath>
#include <sstream>

namespace graphdim {

namespace {

double reconstruction_error(const SampledFunction& f, const SampledFunction& g,
                            const SampledFunction& h) {
    double worst = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        worst = std::max(worst, std::abs(f.values[i] - g.values[i] * h.values[i]));
    }
    return worst;
}

DecompositionResult assemble(const ExprPtr& f, ExprPtr g, ExprPtr h, double beta_target,
                             std::optional<double> alpha_target, EstimateResult est_f,
                             const EstimateConfig& config) {
    DecompositionResult out;
    out.g = std::move(g);
    out.h = std::move(h);
    out.beta_target = beta_target;
    out.alpha_target = alpha_target;
    out.est_f = est_f.estimate;

    const SampledFunction sf = sample(f, config.m);
    const SampledFunction sg = sample(out.g, config.m);
    const SampledFunction sh = sample(out.h, config.m);
    out.est_g = estimate_sampled(sg, config.window).estimate;
    out.est_h = estimate_sampled(sh, config.window).estimate;
    out.recon_error = reconstruction_error(sf, sg, sh);

    const double budget = 1e-9 * (1.0 + std::max(std::abs(sf.min_value()), sf.max_value()));
    if (out.recon_error > budget) {
        throw EvalError("decomposition does not reconstruct f: max |f - g*h| = " +
                        format_double(out.recon_error));
    }
    return out;
}

EstimateResult checked_estimate(const ExprPtr& f, const EstimateConfig& config) {
    const SampledFunction sf = sample(f, config.m);
    require_zero_free(sf);
    return estimate_sampled(sf, config.window);
}

ExprPtr target_function(double beta, const EstimateConfig& config) {
    return dimension_fixture(beta, config.m);
}

} // namespace

DecompositionResult decompose_equal(const ExprPtr& f, const EstimateConfig& config) {
    EstimateResult est_f = checked_estimate(f, config);
    const double beta = est_f.estimate.slope;
    return assemble(f, make_reciprocal(f), make_power(f, 2), beta, std::nullopt,
                    std::move(est_f), config);
}

DecompositionResult decompose_target(const ExprPtr& f, double beta,
                                     const EstimateConfig& config) {
    if (beta == 2.0) {
        throw InfeasibleError(
            "beta = 2 is not supported: the construction reaching the endpoint is not "
            "verifiable at finite scale");
    }
    if (beta < 1.0 || beta > 2.0) {
        throw InfeasibleError("beta must lie in [1,2)");
    }
    EstimateResult est_f = checked_estimate(f, config);
    // graph dimensions only grow under the k*f route, so a target below the
    // estimated dimension of f is unreachable (only-if direction)
    if (beta < est_f.estimate.slope - 0.05) {
        std::ostringstream msg;
        msg << "target beta = " << format_double(beta) << " is below the estimated dimension "
            << format_double(est_f.estimate.slope) << " of f; a product decomposition with "
            << "equal factor dimensions exists only if dim G(f) <= beta";
        throw InfeasibleError(msg.str());
    }
    const ExprPtr k = target_function(beta, config);
    return assemble(f, make_product(k, f), make_reciprocal(k), beta, std::nullopt,
                    std::move(est_f), config);
}

DecompositionResult decompose_two_targets(const ExprPtr& f, double alpha_check, double beta,
                                          const EstimateConfig& config) {
    if (!(beta >= 1.0 && beta < alpha_check)) {
        std::ostringstream msg;
        msg << "beta = " << format_double(beta) << " must lie in [1, alpha) = [1, "
            << format_double(alpha_check) << ")";
        throw InfeasibleError(msg.str());
    }
    EstimateResult est_f = checked_estimate(f, config);
    if (std::abs(est_f.estimate.slope - alpha_check) > 0.1) {
        std::ostringstream msg;
        msg << "alpha = " << format_double(alpha_check) << " does not match the estimated "
            << "dimension " << format_double(est_f.estimate.slope) << " of f";
        throw InfeasibleError(msg.str());
    }
    const ExprPtr k = target_function(beta, config);
    DecompositionResult out = assemble(f, make_product(k, f), make_reciprocal(k), beta,
                                       alpha_check, std::move(est_f), config);
    return out;
}

namespace {

// splitmix64: tiny, deterministic across platforms
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

} // namespace

BiLipschitzReport bilipschitz_verify(const SampledFunction& f, MapKind kind,
                                     std::int64_t pairs, std::uint64_t seed) {
    if (kind == MapKind::reciprocal) {
        require_zero_free(f);
    } else if (f.min_value() <= 0.0) {
        throw ZeroCrossingError("square-map check needs a strictly positive function; min = " +
                                format_double(f.min_value()));
    }

    BiLipschitzReport report;
    report.map_kind = kind;
    report.pairs_tested = pairs;
    report.m1 = f.min_abs_value();
    report.m2 = std::max(std::abs(f.min_value()), std::abs(f.max_value()));
    report.c1 = 1.0 + 1.0 / std::pow(report.m1, 4);
    report.c2 = 1.0 + std::pow(report.m2, 4);
    report.c3 = 1.0 + 4.0 * report.m2 * report.m2;
    report.c4 = 1.0 + 1.0 / (4.0 * report.m1 * report.m1);

    SplitMix64 rng{seed};
    const auto n = static_cast<std::uint64_t>(f.values.size());
    constexpr double kSlack = 1e-12;
    for (std::int64_t p = 0; p < pairs; ++p) {
        const auto i = static_cast<std::size_t>(rng.next() % n);
        const auto j = static_cast<std::size_t>(rng.next() % n);
        const double dx = f.x_at(i) - f.x_at(j);
        const double dy = f.values[i] - f.values[j];
        const double d2 = dx * dx + dy * dy;
        double mapped;
        double lo, hi;
        if (kind == MapKind::reciprocal) {
            const double dm = 1.0 / f.values[i] - 1.0 / f.values[j];
            mapped = dx * dx + dm * dm;
            lo = d2 / report.c2;
            hi = report.c1 * d2;
        } else {
            const double dm = f.values[i] * f.values[i] - f.values[j] * f.values[j];
            mapped = dx * dx + dm * dm;
            lo = d2 / report.c4;
            hi = report.c3 * d2;
        }
        if (mapped < lo * (1.0 - kSlack) || mapped > hi * (1.0 + kSlack)) {
            ++report.violations;
        }
    }
    return report;
}

} // namespace graphdim
