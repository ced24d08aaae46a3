// The function x(u) = (c0 + c1 u + c2 u^2) exp(-u^2), its critical points
// (real zeros of a cubic), and its extrema over the real line.
#pragma once

#include <vector>

namespace tvbounds {

// Coefficients of the quadratic prefactor of x(u).  In bound evaluation
// c2 = -theta*lambda < 0, so the critical-point cubic never degenerates.
struct CubicCoeffs {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

struct CubicRoots {
    std::vector<double> roots;      // ascending, deduplicated, non-empty
    std::vector<double> residuals;  // cubic evaluated at each root
};

struct XExtrema {
    double xmin = 0.0;
    double xmax = 0.0;
};

double x_eval(const CubicCoeffs& c, double u);

// Real zeros of 2 c2 u^3 + 2 c1 u^2 - 2(c2 - c0) u - c1 = 0, the critical
// points of x.  Closed-form discriminant classification (trigonometric method
// in the three-root case, Cardano otherwise) followed by Newton polishing.
// Requires c2 != 0.
CubicRoots cubic_real_roots(const CubicCoeffs& c);

// Extrema of x over the real line, taken over the critical points.  For
// coefficients realizable as (lambda, alpha1, alpha2, theta) the quadratic
// prefactor has real zeros (its discriminant is a perfect square), so the
// global max >= 0 and min <= 0 are both attained at critical points.
XExtrema x_extrema(const CubicCoeffs& c);

}  // namespace tvbounds
