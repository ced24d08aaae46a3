// Brute-force oracles for the test suites.  Everything here is pure
// evaluation (enumeration, grids, bisection) and shares no code path with the
// implementations it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "tvbounds/cubic.hpp"

namespace oracles {

// Exact Poisson-binomial pmf by full 2^n enumeration (n <= ~20).
inline std::vector<double> enumerate_pmf(const std::vector<double>& p) {
    const std::size_t n = p.size();
    std::vector<double> pmf(n + 1, 0.0);
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        double prob = 1.0;
        int ones = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1) {
                prob *= p[i];
                ++ones;
            } else {
                prob *= 1.0 - p[i];
            }
        }
        pmf[static_cast<std::size_t>(ones)] += prob;
    }
    return pmf;
}

struct GridExtrema {
    double xmin;
    double xmax;
};

// Extrema of x(u) over [-radius, radius]: dense scan, then ternary refinement
// around every grid-local optimum.
inline GridExtrema grid_x_extrema(const tvbounds::CubicCoeffs& c, double radius,
                                  int points) {
    auto eval = [&](double u) { return tvbounds::x_eval(c, u); };
    const double h = 2.0 * radius / (points - 1);

    std::vector<double> us(points), xs(points);
    for (int i = 0; i < points; ++i) {
        us[i] = -radius + h * i;
        xs[i] = eval(us[i]);
    }

    auto refine = [&](double lo, double hi, bool maximize) {
        for (int it = 0; it < 200; ++it) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            const bool keep_left = maximize ? eval(m1) > eval(m2) : eval(m1) < eval(m2);
            if (keep_left) hi = m2;
            else lo = m1;
        }
        return eval(0.5 * (lo + hi));
    };

    GridExtrema ex{xs[0], xs[0]};
    for (int i = 0; i < points; ++i) {
        ex.xmin = std::min(ex.xmin, xs[i]);
        ex.xmax = std::max(ex.xmax, xs[i]);
    }
    for (int i = 1; i + 1 < points; ++i) {
        if (xs[i] >= xs[i - 1] && xs[i] >= xs[i + 1]) {
            ex.xmax = std::max(ex.xmax, refine(us[i - 1], us[i + 1], true));
        }
        if (xs[i] <= xs[i - 1] && xs[i] <= xs[i + 1]) {
            ex.xmin = std::min(ex.xmin, refine(us[i - 1], us[i + 1], false));
        }
    }
    return ex;
}

// Real roots of 2 c2 u^3 + 2 c1 u^2 - 2(c2 - c0) u - c1 by dense sign scan
// plus bisection.  Misses double roots (no sign change); use on draws with
// clearly separated roots.
inline std::vector<double> bisect_cubic_roots(const tvbounds::CubicCoeffs& c,
                                              double radius, int points = 200001) {
    auto q = [&](double u) {
        return ((2.0 * c.c2 * u + 2.0 * c.c1) * u - 2.0 * (c.c2 - c.c0)) * u - c.c1;
    };
    std::vector<double> roots;
    const double h = 2.0 * radius / (points - 1);
    double prev_u = -radius;
    double prev_q = q(prev_u);
    for (int i = 1; i < points; ++i) {
        const double u = -radius + h * i;
        const double qu = q(u);
        if (prev_q == 0.0) {
            roots.push_back(prev_u);
        } else if ((prev_q < 0.0) != (qu < 0.0)) {
            double lo = prev_u, hi = u;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                if ((q(lo) < 0.0) != (q(mid) < 0.0)) hi = mid;
                else lo = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_u = u;
        prev_q = qu;
    }
    return roots;
}

// Search radius covering all real roots of the critical cubic (Cauchy bound
// on the monic form, padded).
inline double cubic_root_radius(const tvbounds::CubicCoeffs& c) {
    const double a = std::abs(c.c1 / c.c2);
    const double b = std::abs(c.c0 / c.c2 - 1.0);
    const double d = std::abs(0.5 * c.c1 / c.c2);
    return std::max(10.0, 1.0 + std::max({a, b, d}) + 1.0);
}

}  // namespace oracles
