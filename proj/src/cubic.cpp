#include "tvbounds/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tvbounds {

double x_eval(const CubicCoeffs& c, double u) {
    return (c.c0 + u * (c.c1 + u * c.c2)) * std::exp(-u * u);
}

namespace {

// Critical-point cubic of x, in u.
double cubic_value(const CubicCoeffs& c, double u) {
    return ((2.0 * c.c2 * u + 2.0 * c.c1) * u - 2.0 * (c.c2 - c.c0)) * u - c.c1;
}

// Newton polish on the monic form u^3 + a u^2 + b u + d.  A couple of steps
// from a closed-form estimate reach the attainable floor; steps are damped
// when the derivative is small (multiple roots).
double polish(double u, double a, double b, double d) {
    for (int it = 0; it < 12; ++it) {
        const double f = ((u + a) * u + b) * u + d;
        if (f == 0.0) break;
        const double fp = (3.0 * u + 2.0 * a) * u + b;
        if (fp == 0.0) break;
        double step = f / fp;
        const double cap = 0.5 * (std::abs(u) + 1.0);
        if (std::abs(step) > cap) step = std::copysign(cap, step);
        const double next = u - step;
        if (next == u) break;
        u = next;
        if (std::abs(step) < 1e-15 * (std::abs(u) + 1.0)) break;
    }
    return u;
}

}  // namespace

CubicRoots cubic_real_roots(const CubicCoeffs& c) {
    if (c.c2 == 0.0) {
        throw std::invalid_argument("cubic_real_roots: c2 must be nonzero");
    }

    CubicRoots out;
    if (c.c0 == 0.0 && c.c1 == 0.0) {
        // 2 c2 u (u^2 - 1) = 0.
        out.roots = {-1.0, 0.0, 1.0};
    } else {
        // Monic: u^3 + a u^2 + b u + d.
        const double a = c.c1 / c.c2;
        const double b = c.c0 / c.c2 - 1.0;
        const double d = -0.5 * a;

        // Depressed: t^3 + p t + q with u = t - a/3.
        const double p = b - a * a / 3.0;
        const double q = (2.0 * a * a / 9.0 - b) * a / 3.0 + d;
        const double discr = 0.25 * q * q + p * p * p / 27.0;
        const double scale = std::max({0.25 * q * q, std::abs(p * p * p) / 27.0, 1e-300});

        std::vector<double> ts;
        if (discr > 1e-14 * scale) {
            // One real root (Cardano).
            const double s = std::sqrt(discr);
            const double w = std::cbrt(std::abs(q) / 2.0 + s);
            double t = w - p / (3.0 * w);
            if (q > 0.0) t = -t;
            ts = {t};
        } else if (discr < -1e-14 * scale) {
            // Three distinct real roots (trigonometric form).
            const double m = 2.0 * std::sqrt(-p / 3.0);
            const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
            const double phi = std::acos(arg) / 3.0;
            ts = {m * std::cos(phi), m * std::cos(phi - 2.0 * M_PI / 3.0),
                  m * std::cos(phi - 4.0 * M_PI / 3.0)};
        } else {
            // Borderline: multiple real roots.
            if (p == 0.0) {
                ts = {std::cbrt(-q)};
            } else {
                ts = {3.0 * q / p, -1.5 * q / p, -1.5 * q / p};
            }
        }

        for (double t : ts) {
            out.roots.push_back(polish(t - a / 3.0, a, b, d));
        }
        std::sort(out.roots.begin(), out.roots.end());

        // Collapse numerically coincident roots.
        std::vector<double> uniq;
        for (double r : out.roots) {
            if (uniq.empty() ||
                std::abs(r - uniq.back()) > 1e-9 * (std::abs(r) + 1.0)) {
                uniq.push_back(r);
            }
        }
        out.roots = std::move(uniq);
    }

    out.residuals.reserve(out.roots.size());
    for (double r : out.roots) {
        out.residuals.push_back(cubic_value(c, r));
    }
    return out;
}

XExtrema x_extrema(const CubicCoeffs& c) {
    const CubicRoots cr = cubic_real_roots(c);
    XExtrema ex{x_eval(c, cr.roots.front()), x_eval(c, cr.roots.front())};
    for (double r : cr.roots) {
        const double v = x_eval(c, r);
        ex.xmin = std::min(ex.xmin, v);
        ex.xmax = std::max(ex.xmax, v);
    }
    return ex;
}

}  // namespace tvbounds
