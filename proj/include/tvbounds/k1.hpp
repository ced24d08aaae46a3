// Evaluation of the optimized lower-bound coefficient K1(lambda): the
// h/g functions of the tilted-Gaussian test function
// f(k) = (k - alpha1) exp(-(k - alpha2)^2 / (theta lambda)), the cubic
// extremum machinery behind g, and the feasibility-constrained objective
// (1 - h) / (2 g).
#pragma once

#include "tvbounds/cubic.hpp"

namespace tvbounds {

// Feasibility bound on alpha2: the cubic-moment term of the bound is
// droppable only when alpha2 <= lambda + 3/2.
inline double alpha2_max(double lambda) { return lambda + 1.5; }

// Coefficients of the quadratic prefactor of x(u) for the given parameters:
//   c0 = (alpha2 - alpha1)(lambda - alpha2)
//   c1 = sqrt(theta lambda) (lambda + alpha1 - 2 alpha2)
//   c2 = -theta lambda
CubicCoeffs stein_cubic_coeffs(double lambda, double alpha1, double alpha2,
                               double theta);

// h = [3 lambda + (2 - alpha2 + lambda)^3 - (1 - alpha2 + lambda)^3] / (theta lambda)
//   + |alpha1 - alpha2| (2 lambda + |3 - 2 alpha2|)
//     exp(-(1 - alpha2)_+^2 / (theta lambda)) / (theta lambda).
// The cube difference is evaluated in the expanded form 3 d^2 + 9 d + 7 with
// d = lambda - alpha2 to avoid cancellation between large cubes.
double h_lambda(double lambda, double alpha1, double alpha2, double theta);

// g = max{ |(1 + t) lambda + max_i x(u_i)|, |(2 e^-3/2 + t) lambda - min_i x(u_i)| }
// with t = sqrt(2 / (theta lambda e)) |alpha1 - alpha2| and the x extrema
// taken over the critical points of x.  Always > 0 for lambda > 0.
double g_lambda(double lambda, double alpha1, double alpha2, double theta);

// (1 - h) / (2 g); may be negative (a vacuous candidate).  Throws when
// theta <= 0, lambda <= 0, or alpha2 > lambda + 3/2.
double k1_objective(double lambda, double alpha1, double alpha2, double theta);

}  // namespace tvbounds
