#pragma once

#include "graphdim/estimate.hpp"
#include "graphdim/sampled.hpp"

#include <cstdint>
#include <optional>

namespace graphdim {

/// A product factorization f = g * h with prescribed graph dimensions.
struct DecompositionResult {
    ExprPtr g;
    ExprPtr h;
    double beta_target = 0.0;
    std::optional<double> alpha_target; // two-target mode only
    DimensionEstimate est_f;
    DimensionEstimate est_g;
    DimensionEstimate est_h;
    double recon_error = 0.0; // max over grid of |f - g*h|
};

inline constexpr EstimateConfig kDecomposeConfig{22, FitWindow{6, 16}};

/// f = (1/f) * f^2; both factors inherit the dimension of f.
DecompositionResult decompose_equal(const ExprPtr& f,
                                    const EstimateConfig& config = kDecomposeConfig);

/// f = (k*f) * (1/k) with dim G(k) = beta >= dim G(f). beta in [1,2);
/// beta = 2 and beta below est(f) - 0.05 raise InfeasibleError.
DecompositionResult decompose_target(const ExprPtr& f, double beta,
                                     const EstimateConfig& config = kDecomposeConfig);

/// f = (k*f) * (1/k) with dim G(k*f) = alpha (the dimension of f) and
/// dim G(1/k) = beta, for beta in [1, alpha).
DecompositionResult decompose_two_targets(const ExprPtr& f, double alpha_check, double beta,
                                          const EstimateConfig& config = kDecomposeConfig);

enum class MapKind { reciprocal, square };

/// Sampled two-sided distortion check for the graph maps behind the
/// reciprocal and square dimension invariances.
struct BiLipschitzReport {
    MapKind map_kind = MapKind::reciprocal;
    double m1 = 0.0; // inf grid |f|
    double m2 = 0.0; // sup grid |f|
    double c1 = 0.0; // 1 + 1/M1^4
    double c2 = 0.0; // 1 + M2^4
    double c3 = 0.0; // 1 + 4 M2^2
    double c4 = 0.0; // 1 + 1/(4 M1^2)
    std::int64_t violations = 0;
    std::int64_t pairs_tested = 0;
};

/// Draws `pairs` seeded random index pairs (i,j) and checks, for the
/// reciprocal map, C2^-1 d^2 <= d'^2 <= C1 d^2 where d^2 is the squared
/// graph distance and d'^2 replaces f by 1/f; for the square map,
/// C4^-1 d^2 <= d''^2 <= C3 d^2 with f^2. Slack 1e-12 relative.
/// Reciprocal mode needs f zero-free; square mode needs f > 0.
BiLipschitzReport bilipschitz_verify(const SampledFunction& f, MapKind kind,
                                     std::int64_t pairs, std::uint64_t seed);

} // namespace graphdim
