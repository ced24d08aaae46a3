// Constrained maximization of the K1 objective over (alpha1, alpha2, theta):
// deterministic coarse grid multistart followed by Nelder-Mead refinement.
#pragma once

#include <cstdint>

namespace tvbounds {

enum class K1Variant {
    three_param,   // alpha1, alpha2 free (alpha2 <= lambda + 3/2), theta > 0
    common_alpha,  // alpha1 = alpha2 = alpha, two free parameters
    closed_form,   // alpha = lambda, theta = theta*(lambda)
};

struct OptimizerConfig {
    // Coarse multistart grid (theta axis is log-spaced).
    int grid_alpha1 = 12;
    int grid_alpha2 = 12;
    int grid_theta = 12;
    // Local refinement.
    int refine_starts = 5;
    int simplex_max_iter = 400;
    double simplex_tol = 1e-12;
    // Search box: alpha in lambda +/- (span*sqrt(lambda) + pad), capped above
    // by lambda + 3/2 for alpha2; theta in [theta_lo, scale*theta* + pad].
    double box_alpha_span = 10.0;
    double box_alpha_pad = 10.0;
    double box_theta_lo = 1e-3;
    double box_theta_scale = 10.0;
    double box_theta_pad = 100.0;
};

struct K1SearchResult {
    double k1 = 0.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double theta = 0.0;
    std::int64_t evaluations = 0;
    bool vacuous = false;  // k1 <= 0
    K1Variant variant = K1Variant::closed_form;
};

// Maximizes the K1 objective for the requested variant.  Deterministic for a
// fixed config.  Seeding keeps the chain
//   three_param >= common_alpha >= closed_form
// exact: common_alpha starts from the closed-form point, three_param from the
// common_alpha argmax, and the best value ever evaluated is returned, so a
// refinement can never fall below its seed.
K1SearchResult optimize_k1(double lambda, K1Variant variant,
                           const OptimizerConfig& config = {});

}  // namespace tvbounds
