#include "tvbounds/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "tvbounds/bounds.hpp"
#include "tvbounds/k1.hpp"

namespace tvbounds {

namespace {

struct Box {
    double alpha_lo, alpha1_hi, alpha2_hi, theta_lo, theta_hi;
};

Box make_box(double lambda, const OptimizerConfig& cfg) {
    const double spread = cfg.box_alpha_span * std::sqrt(lambda) + cfg.box_alpha_pad;
    return Box{
        lambda - spread,
        lambda + spread,
        alpha2_max(lambda),
        cfg.box_theta_lo,
        cfg.box_theta_scale * theta_star(lambda) + cfg.box_theta_pad,
    };
}

// Objective wrapper: -inf outside the box keeps the simplex feasible without
// projections.
class Objective {
  public:
    Objective(double lambda, const Box& box) : lambda_(lambda), box_(box) {}

    // v = (alpha1, alpha2, theta); for the common-alpha variant callers pass
    // alpha1 == alpha2.
    double operator()(double a1, double a2, double th) {
        ++evals_;
        if (a1 < box_.alpha_lo || a1 > box_.alpha1_hi || a2 < box_.alpha_lo ||
            a2 > box_.alpha2_hi || th < box_.theta_lo || th > box_.theta_hi) {
            return -1e300;
        }
        const double v = k1_objective(lambda_, a1, a2, th);
        if (v > best_val_) {
            best_val_ = v;
            best_ = {a1, a2, th};
        }
        return v;
    }

    std::int64_t evaluations() const { return evals_; }
    double best_value() const { return best_val_; }
    const std::array<double, 3>& best_point() const { return best_; }

  private:
    double lambda_;
    Box box_;
    std::int64_t evals_ = 0;
    double best_val_ = -1e300;
    std::array<double, 3> best_{0.0, 0.0, 0.0};
};

// Minimal Nelder-Mead maximizer over dim in {2, 3}.  The best point is
// tracked inside Objective, so nothing is lost if the simplex collapses.
void nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                 std::vector<double> start, const std::vector<double>& step,
                 int max_iter, double tol) {
    const std::size_t dim = start.size();
    std::vector<std::vector<double>> pts(dim + 1, start);
    std::vector<double> vals(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        pts[i + 1][i] += step[i];
    }
    for (std::size_t i = 0; i <= dim; ++i) {
        vals[i] = f(pts[i]);
    }

    for (int it = 0; it < max_iter; ++it) {
        // Order: vals[order[0]] best (largest).
        std::vector<std::size_t> order(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
        const std::size_t best = order[0], worst = order[dim], second = order[dim - 1];

        if (std::abs(vals[best] - vals[worst]) <
            tol * (std::abs(vals[best]) + tol)) {
            break;
        }

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += pts[i][k];
        }
        for (double& ck : centroid) ck /= static_cast<double>(dim);

        auto blend = [&](double coef) {
            std::vector<double> p(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                p[k] = centroid[k] + coef * (centroid[k] - pts[worst][k]);
            }
            return p;
        };

        std::vector<double> refl = blend(1.0);
        const double frefl = f(refl);
        if (frefl > vals[best]) {
            std::vector<double> expa = blend(2.0);
            const double fexpa = f(expa);
            if (fexpa > frefl) {
                pts[worst] = std::move(expa);
                vals[worst] = fexpa;
            } else {
                pts[worst] = std::move(refl);
                vals[worst] = frefl;
            }
            continue;
        }
        if (frefl > vals[second]) {
            pts[worst] = std::move(refl);
            vals[worst] = frefl;
            continue;
        }
        std::vector<double> contr = blend(frefl > vals[worst] ? 0.5 : -0.5);
        const double fcontr = f(contr);
        if (fcontr > std::max(frefl, vals[worst])) {
            pts[worst] = std::move(contr);
            vals[worst] = fcontr;
            continue;
        }
        // Shrink toward the best vertex.
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < dim; ++k) {
                pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
            }
            vals[i] = f(pts[i]);
        }
    }
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> v(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) {
        v[i] = std::exp(llo + (lhi - llo) * i / std::max(1, n - 1));
    }
    return v;
}

std::vector<double> lin_spaced(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = lo + (hi - lo) * i / std::max(1, n - 1);
    }
    return v;
}

// Keeps the `count` best grid points as refinement starts.
std::vector<std::array<double, 3>> top_starts(
    std::vector<std::pair<double, std::array<double, 3>>>& scored, int count) {
    // stable_sort: ties broken by first-found grid order.
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::array<double, 3>> out;
    for (const auto& [val, pt] : scored) {
        if (static_cast<int>(out.size()) >= count) break;
        if (val <= -1e300) break;
        out.push_back(pt);
    }
    return out;
}

K1SearchResult finish(double lambda, K1Variant variant, const Objective& obj) {
    K1SearchResult r;
    r.variant = variant;
    r.alpha1 = obj.best_point()[0];
    r.alpha2 = obj.best_point()[1];
    r.theta = obj.best_point()[2];
    // Re-evaluate so the reported k1 is exactly the objective at the argmax.
    r.k1 = k1_objective(lambda, r.alpha1, r.alpha2, r.theta);
    r.evaluations = obj.evaluations();
    r.vacuous = !(r.k1 > 0.0);
    return r;
}

}  // namespace

K1SearchResult optimize_k1(double lambda, K1Variant variant,
                           const OptimizerConfig& cfg) {
    const double ts = theta_star(lambda);
    const Box box = make_box(lambda, cfg);
    Objective obj(lambda, box);

    if (variant == K1Variant::closed_form) {
        // No search: the closed form is the value at (lambda, lambda, theta*).
        K1SearchResult r;
        r.variant = variant;
        r.k1 = k1_tilde(lambda);
        r.alpha1 = lambda;
        r.alpha2 = lambda;
        r.theta = ts;
        r.evaluations = 1;
        r.vacuous = !(r.k1 > 0.0);
        return r;
    }

    if (variant == K1Variant::common_alpha) {
        const auto alphas = lin_spaced(box.alpha_lo, box.alpha2_hi, cfg.grid_alpha2);
        const auto thetas = log_spaced(box.theta_lo, box.theta_hi, cfg.grid_theta);
        std::vector<std::pair<double, std::array<double, 3>>> scored;
        for (double a : alphas) {
            for (double th : thetas) {
                scored.push_back({obj(a, a, th), {a, a, th}});
            }
        }
        auto starts = top_starts(scored, cfg.refine_starts);
        starts.push_back({lambda, lambda, ts});

        const double astep = 0.05 * (box.alpha2_hi - box.alpha_lo);
        for (const auto& s : starts) {
            nelder_mead(
                [&](const std::vector<double>& v) { return obj(v[0], v[0], v[1]); },
                {s[0], s[2]}, {astep, 0.25 * s[2]}, cfg.simplex_max_iter,
                cfg.simplex_tol);
        }
        return finish(lambda, variant, obj);
    }

    // three_param: seed with the common-alpha argmax so the variant chain is
    // exact, then multistart over the full box.
    const K1SearchResult common = optimize_k1(lambda, K1Variant::common_alpha, cfg);

    const auto a1s = lin_spaced(box.alpha_lo, box.alpha1_hi, cfg.grid_alpha1);
    const auto a2s = lin_spaced(box.alpha_lo, box.alpha2_hi, cfg.grid_alpha2);
    const auto thetas = log_spaced(box.theta_lo, box.theta_hi, cfg.grid_theta);
    std::vector<std::pair<double, std::array<double, 3>>> scored;
    for (double a1 : a1s) {
        for (double a2 : a2s) {
            for (double th : thetas) {
                scored.push_back({obj(a1, a2, th), {a1, a2, th}});
            }
        }
    }
    auto starts = top_starts(scored, cfg.refine_starts);
    starts.push_back({lambda, lambda, ts});
    starts.push_back({common.alpha1, common.alpha2, common.theta});

    const double a1step = 0.05 * (box.alpha1_hi - box.alpha_lo);
    const double a2step = 0.05 * (box.alpha2_hi - box.alpha_lo);
    for (const auto& s : starts) {
        nelder_mead(
            [&](const std::vector<double>& v) { return obj(v[0], v[1], v[2]); },
            {s[0], s[1], s[2]}, {a1step, -a2step, 0.25 * s[2]},
            cfg.simplex_max_iter, cfg.simplex_tol);
    }
    K1SearchResult r = finish(lambda, K1Variant::three_param, obj);
    r.evaluations += common.evaluations;
    // The chain must not lose to the nested variant by roundoff.
    if (common.k1 > r.k1) {
        r.k1 = common.k1;
        r.alpha1 = common.alpha1;
        r.alpha2 = common.alpha2;
        r.theta = common.theta;
        r.vacuous = common.vacuous;
    }
    return r;
}

}  // namespace tvbounds
