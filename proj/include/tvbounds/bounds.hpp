// Closed-form bound coefficients for the Poisson approximation of a Bernoulli
// sum: Le Cam's inequality, the Barbour-Hall (1984) upper and lower bounds,
// the closed-form tilted-Gaussian lower-bound coefficient K1~ with its
// optimal theta, and the Deheuvels-Pfeifer (1986) asymptotic.
#pragma once

#include <map>
#include <string>

#include "tvbounds/distributions.hpp"

namespace tvbounds {

// Below this lambda the coefficient functions use their continuous extensions
// at 0 instead of forming 0/0.
inline constexpr double kLambdaEps = 1e-12;

// Le Cam: d_TV <= sum p_i^2.
double le_cam_upper(const ProbVector& p);

// (1 - e^-lambda)/lambda, the Barbour-Hall upper-bound coefficient; extended
// continuously to 1 at lambda -> 0.
double bh_upper_coeff(double lambda);
double barbour_hall_upper(double lambda, double sum_p2);

// (1/32) min(1, 1/lambda), the Barbour-Hall lower-bound coefficient.
double bh_lower_coeff(double lambda);
double barbour_hall_lower(double lambda, double sum_p2);

// Maximizer of the closed-form lower-bound coefficient over theta at
// alpha1 = alpha2 = lambda:
//   theta* = 3 + 7/lambda + sqrt((3 lambda + 7)((3 + 2 e^-1/2) lambda + 7))/lambda.
// Always > 3; lambda * theta* -> 14 as lambda -> 0 and
// theta* -> 3 + sqrt(3 (3 + 2 e^-1/2)) as lambda -> infinity.
double theta_star(double lambda);

// The closed-form lower-bound coefficient
//   K1~(lambda) = (e / (2 lambda)) (1 - (3 + 7/lambda)/theta*) / (theta* + 2 e^-1/2),
// strictly positive for every lambda > 0.
double k1_tilde(double lambda);

// Ratio of the Barbour-Hall upper coefficient to K1~(lambda); tends to
// ~10.539 as lambda -> infinity and to 56/e as lambda -> 0.
double bound_ratio_closed(double lambda);

// Deheuvels-Pfeifer: d_TV ~ sum p_i^2 / (sqrt(2 pi e) lambda) as
// lambda -> infinity with max p_i -> 0.
double asymptotic_tv_coeff(double lambda);
double asymptotic_tv(double lambda, double sum_p2);

// Published reference values, exposed for tests and CLI output only; they are
// never used in bound computation.  Keys: ratio_inf, ratio_zero,
// improvement_inf, improvement_zero, bh_ratio, claimed_const.
const std::map<std::string, double>& reference_constants();

}  // namespace tvbounds
