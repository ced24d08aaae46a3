#include "tvbounds/k1.hpp"

#include <cmath>
#include <stdexcept>

namespace tvbounds {

namespace {

void require_domain(double lambda, double theta, const char* where) {
    if (!(lambda > 0.0)) {
        throw std::invalid_argument(std::string(where) + ": lambda must be > 0");
    }
    if (!(theta > 0.0)) {
        throw std::invalid_argument(std::string(where) + ": theta must be > 0");
    }
}

}  // namespace

CubicCoeffs stein_cubic_coeffs(double lambda, double alpha1, double alpha2,
                               double theta) {
    require_domain(lambda, theta, "stein_cubic_coeffs");
    return CubicCoeffs{
        (alpha2 - alpha1) * (lambda - alpha2),
        std::sqrt(theta * lambda) * (lambda + alpha1 - 2.0 * alpha2),
        -theta * lambda,
    };
}

double h_lambda(double lambda, double alpha1, double alpha2, double theta) {
    require_domain(lambda, theta, "h_lambda");
    const double tl = theta * lambda;
    const double d = lambda - alpha2;
    const double cube_diff = (3.0 * d + 9.0) * d + 7.0;  // (2+d)^3 - (1+d)^3
    const double pos = std::max(1.0 - alpha2, 0.0);
    const double damp = std::exp(-pos * pos / tl);
    return (3.0 * lambda + cube_diff) / tl +
           std::abs(alpha1 - alpha2) * (2.0 * lambda + std::abs(3.0 - 2.0 * alpha2)) *
               damp / tl;
}

double g_lambda(double lambda, double alpha1, double alpha2, double theta) {
    require_domain(lambda, theta, "g_lambda");
    const XExtrema ex = x_extrema(stein_cubic_coeffs(lambda, alpha1, alpha2, theta));
    const double t =
        std::sqrt(2.0 / (theta * lambda * std::exp(1.0))) * std::abs(alpha1 - alpha2);
    const double up = std::abs((1.0 + t) * lambda + ex.xmax);
    const double down = std::abs((2.0 * std::exp(-1.5) + t) * lambda - ex.xmin);
    return std::max(up, down);
}

double k1_objective(double lambda, double alpha1, double alpha2, double theta) {
    require_domain(lambda, theta, "k1_objective");
    if (alpha2 > alpha2_max(lambda)) {
        throw std::invalid_argument(
            "k1_objective: alpha2 exceeds lambda + 3/2 (infeasible)");
    }
    const double h = h_lambda(lambda, alpha1, alpha2, theta);
    const double g = g_lambda(lambda, alpha1, alpha2, theta);
    return (1.0 - h) / (2.0 * g);
}

}  // namespace tvbounds
