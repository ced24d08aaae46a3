#include "tvbounds/verify.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "tvbounds/bounds.hpp"
#include "tvbounds/distributions.hpp"
#include "tvbounds/k1.hpp"
#include "tvbounds/rng.hpp"
#include "tvbounds/stein.hpp"

namespace tvbounds {

namespace {

class Checker {
  public:
    explicit Checker(std::ostream& log) : log_(log) {}

    void expect(bool ok, const std::string& what) {
        ++summary_.checks;
        if (!ok) ++summary_.failures;
        log_ << (ok ? "  pass  " : "  FAIL  ") << what << "\n";
    }

    const VerifySummary& summary() const { return summary_; }

  private:
    std::ostream& log_;
    VerifySummary summary_;
};

ProbVector random_instance(SplitMix64& rng, int max_n, double p_lo = 0.0) {
    const long long n = rng.uniform_int(1, max_n);
    std::vector<double> ps(static_cast<std::size_t>(n));
    for (double& p : ps) p = rng.uniform(p_lo, 1.0);
    return ProbVector(ps);
}

void suite_limits(Checker& ck) {
    const auto& ref = reference_constants();

    const double ratio_inf = bound_ratio_closed(1e6);
    ck.expect(std::abs(ratio_inf - ref.at("ratio_inf")) < 0.01,
              "upper/lower coefficient ratio at lambda=1e6 ~ 10.539");
    const double ratio_zero = bound_ratio_closed(1e-6);
    ck.expect(std::abs(ratio_zero - ref.at("ratio_zero")) < 0.01,
              "upper/lower coefficient ratio at lambda=1e-6 ~ 56/e");
    ck.expect(std::abs(32.0 / ratio_inf - ref.at("improvement_inf")) < 0.01,
              "improvement factor 32/ratio at lambda=1e6 ~ 3.037");
    ck.expect(std::abs(32.0 / ratio_zero - ref.at("improvement_zero")) < 0.01,
              "improvement factor 32/ratio at lambda=1e-6 ~ 1.553");

    const double lam_lo = 1e-8;
    ck.expect(std::abs(lam_lo * theta_star(lam_lo) - 14.0) / 14.0 < 1e-4,
              "lambda * theta* -> 14 as lambda -> 0");
    const double theta_inf = 3.0 + std::sqrt(3.0 * (3.0 + 2.0 * std::exp(-0.5)));
    ck.expect(std::abs(theta_star(1e8) - theta_inf) / theta_inf < 1e-4,
              "theta* -> 3 + sqrt(3(3 + 2e^-1/2)) as lambda -> inf");

    const double sqrt_2pie = std::sqrt(2.0 * M_PI * std::exp(1.0));
    ck.expect(std::abs(bh_upper_coeff(50.0) / asymptotic_tv_coeff(50.0) -
                       sqrt_2pie) < 0.001,
              "BH upper / asymptotic coefficient ratio ~ sqrt(2 pi e)");

    // theta* maximizes the closed form: a +/-1% perturbation strictly
    // decreases the objective at alpha1 = alpha2 = lambda.
    for (double lam : {0.1, 1.0, 10.0}) {
        const double ts = theta_star(lam);
        const double at = k1_objective(lam, lam, lam, ts);
        ck.expect(k1_objective(lam, lam, lam, ts * 1.01) < at &&
                      k1_objective(lam, lam, lam, ts * 0.99) < at,
                  "theta* is a strict local max of the closed form at lambda=" +
                      std::to_string(lam));
    }

    // The closed form dominates the 1/32 coefficient on a wide lambda range.
    bool dominates = true;
    for (int e = -3; e <= 3; ++e) {
        const double lam = std::pow(10.0, e);
        if (k1_tilde(lam) < bh_lower_coeff(lam)) dominates = false;
    }
    ck.expect(dominates, "K1~ >= (1/32) min(1, 1/lambda) for lambda in 10^[-3..3]");
}

void suite_stein(Checker& ck, std::uint64_t seed) {
    SplitMix64 rng(seed);

    int eq1_bad = 0;
    for (int i = 0; i < 50; ++i) {
        SteinParams sp;
        sp.lambda = rng.uniform(0.1, 20.0);
        sp.alpha1 = rng.uniform(sp.lambda - 5.0, sp.lambda + 5.0);
        sp.alpha2 = rng.uniform(sp.lambda - 5.0, sp.lambda + 5.0);
        sp.theta = rng.uniform(0.5, 50.0);
        const long long trunc =
            std::max<long long>(default_sup_trunc(sp),
                                static_cast<long long>(sp.lambda + 12.0 * std::sqrt(sp.lambda)) + 40);
        if (stein_identity_residual(sp, trunc) >= 1e-10) ++eq1_bad;
    }
    ck.expect(eq1_bad == 0, "Poisson characterizing identity residual < 1e-10 (50 draws)");

    int eq2_bad = 0;
    for (int i = 0; i < 50; ++i) {
        const ProbVector p = random_instance(rng, 10);
        SteinParams sp;
        sp.lambda = p.lambda();
        sp.alpha1 = rng.uniform(p.lambda() - 5.0, p.lambda() + 5.0);
        sp.alpha2 = rng.uniform(p.lambda() - 5.0, p.lambda() + 5.0);
        sp.theta = rng.uniform(0.5, 50.0);
        const auto [lhs, rhs] = stein_transfer_both_sides(p, sp);
        if (std::abs(lhs - rhs) >= 1e-10) ++eq2_bad;
    }
    ck.expect(eq2_bad == 0, "transfer identity |lhs - rhs| < 1e-10 (50 instances)");

    int eq4_bad = 0;
    for (int i = 0; i < 100; ++i) {
        // Entries bounded away from 0: with lambda ~ 0 the Gaussian factor of
        // f underflows at every integer and the quotient denominator vanishes.
        const ProbVector p = random_instance(rng, 12, 0.02);
        SteinParams sp;
        sp.lambda = p.lambda();
        sp.alpha1 = rng.uniform(p.lambda() - 3.0, p.lambda() + 3.0);
        sp.alpha2 = rng.uniform(p.lambda() - 3.0, p.lambda() + 1.5);
        sp.theta = rng.uniform(0.5, 30.0);
        const double q = chen_stein_quotient(p, sp);
        if (q > exact_tv_poisson_approx(p) + 1e-12) ++eq4_bad;
    }
    ck.expect(eq4_bad == 0, "quotient lower bound <= exact TV (100 pairs)");
}

void suite_sandwich(Checker& ck, std::uint64_t seed,
                    const OptimizerConfig& config) {
    SplitMix64 rng(seed);
    int bad = 0;
    for (int i = 0; i < 200; ++i) {
        const ProbVector p = random_instance(rng, 12);
        const double tv = exact_tv_poisson_approx(p);
        const double upper = barbour_hall_upper(p.lambda(), p.sum_p2());
        const double closed = k1_tilde(p.lambda()) * p.sum_p2();
        const double three =
            optimize_k1(p.lambda(), K1Variant::three_param, config).k1 * p.sum_p2();
        const bool ok = closed <= three + 1e-9 && closed <= tv + 1e-12 &&
                        three <= tv + 1e-12 && tv <= upper + 1e-12 &&
                        upper <= le_cam_upper(p) + 1e-12;
        if (!ok) ++bad;
    }
    ck.expect(bad == 0,
              "K1~ <= K1 <= exact TV <= BH upper <= Le Cam (200 instances)");
}

void suite_ordering(Checker& ck, const OptimizerConfig& config) {
    int bad_chain = 0;
    for (int i = 0; i < 30; ++i) {
        const double lam =
            std::exp(std::log(0.01) + (std::log(100.0) - std::log(0.01)) * i / 29.0);
        const double closed = k1_tilde(lam);
        const double common = optimize_k1(lam, K1Variant::common_alpha, config).k1;
        const double three = optimize_k1(lam, K1Variant::three_param, config).k1;
        const bool ok = three >= common - 1e-9 && common >= closed - 1e-9 &&
                        closed >= bh_lower_coeff(lam) - 1e-9;
        if (!ok) ++bad_chain;
    }
    ck.expect(bad_chain == 0,
              "K1(three) >= K1(common) >= K1~ >= BH lower on 30-pt log grid");
}

}  // namespace

VerifySummary run_verify_suite(const std::string& suite, std::uint64_t seed,
                               std::ostream& log, const OptimizerConfig& config) {
    Checker ck(log);
    bool known = false;
    if (suite == "limits" || suite == "all") {
        log << "suite limits:\n";
        suite_limits(ck);
        known = true;
    }
    if (suite == "stein" || suite == "all") {
        log << "suite stein (seed " << seed << "):\n";
        suite_stein(ck, seed);
        known = true;
    }
    if (suite == "sandwich" || suite == "all") {
        log << "suite sandwich (seed " << seed << "):\n";
        suite_sandwich(ck, seed, config);
        known = true;
    }
    if (suite == "ordering" || suite == "all") {
        log << "suite ordering:\n";
        suite_ordering(ck, config);
        known = true;
    }
    if (!known) {
        throw std::invalid_argument("run_verify_suite: unknown suite '" + suite +
                                    "'");
    }
    const VerifySummary& s = ck.summary();
    log << (s.ok() ? "OK" : "FAILED") << ": " << (s.checks - s.failures) << "/"
        << s.checks << " checks passed\n";
    return s;
}

}  // namespace tvbounds
