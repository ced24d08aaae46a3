#include "tvbounds/stein.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvbounds {

namespace {

void require_valid(const SteinParams& params, const char* where) {
    if (!(params.theta > 0.0)) {
        throw std::invalid_argument(std::string(where) +
                                    ": theta must be > 0 (f unbounded otherwise)");
    }
    if (!(params.lambda > 0.0)) {
        throw std::invalid_argument(std::string(where) + ": lambda must be > 0");
    }
}

void require_matching_lambda(const ProbVector& p, const SteinParams& params,
                             const char* where) {
    const double lam = p.lambda();
    if (std::abs(params.lambda - lam) > 1e-9 * std::max(1.0, lam)) {
        throw std::invalid_argument(std::string(where) +
                                    ": params.lambda must equal sum p_i");
    }
}

// E[f(V+2) - f(V+1)] for the distribution in `table`.
double expected_delta_f(const DistTable& table, const SteinParams& params) {
    double acc = 0.0;
    for (std::size_t k = 0; k < table.pmf.size(); ++k) {
        const long long kk = static_cast<long long>(k);
        acc += table.pmf[k] * (f_eval(params, kk + 2) - f_eval(params, kk + 1));
    }
    return acc;
}

}  // namespace

double f_eval(const SteinParams& params, long long k) {
    require_valid(params, "f_eval");
    const double kd = static_cast<double>(k);
    const double z = kd - params.alpha2;
    return (kd - params.alpha1) * std::exp(-z * z / (params.theta * params.lambda));
}

double stein_operator(const SteinParams& params, long long k) {
    return params.lambda * f_eval(params, k + 1) -
           static_cast<double>(k) * f_eval(params, k);
}

long long default_sup_trunc(const SteinParams& params) {
    require_valid(params, "default_sup_trunc");
    constexpr double log_inv_eps = 41.5;  // eps = 1e-18
    const double reach = std::max(0.0, params.alpha2) +
                         std::sqrt(params.theta * params.lambda * log_inv_eps);
    return static_cast<long long>(std::ceil(reach)) + 50;
}

double stein_operator_sup(const SteinParams& params, long long trunc_k) {
    require_valid(params, "stein_operator_sup");
    if (trunc_k < 1) {
        throw std::invalid_argument("stein_operator_sup: trunc_k must be >= 1");
    }
    double sup = 0.0;
    for (long long k = 0; k <= trunc_k; ++k) {
        sup = std::max(sup, std::abs(stein_operator(params, k)));
    }
    // Beyond the cut the operator is dominated by a decreasing envelope
    // (Gaussian decay beats the linear prefactor); check that the envelope is
    // already negligible and decreasing at the cut.
    auto envelope = [&](long long k) {
        const double kd = static_cast<double>(k);
        return params.lambda * std::abs(f_eval(params, k + 1)) +
               kd * std::abs(f_eval(params, k));
    };
    const double at_cut = envelope(trunc_k);
    if (!(at_cut <= 1e-9 * std::max(sup, 1e-300)) ||
        envelope(trunc_k + 1) > at_cut) {
        throw std::invalid_argument(
            "stein_operator_sup: trunc_k too small for a certified sup");
    }
    return sup;
}

double stein_identity_residual(const SteinParams& params, long long trunc_k) {
    require_valid(params, "stein_identity_residual");
    const DistTable po =
        poisson_pmf(params.lambda, static_cast<std::size_t>(trunc_k));
    double acc = 0.0;
    for (long long k = 0; k <= trunc_k; ++k) {
        acc += po.pmf[static_cast<std::size_t>(k)] * stein_operator(params, k);
    }
    return std::abs(acc);
}

std::pair<double, double> stein_transfer_both_sides(const ProbVector& p,
                                                    const SteinParams& params) {
    require_valid(params, "stein_transfer_both_sides");
    if (p.size() > kSteinInstanceLimit) {
        throw std::invalid_argument(
            "stein_transfer_both_sides: instance too large (n = " +
            std::to_string(p.size()) + ", limit = " +
            std::to_string(kSteinInstanceLimit) + ")");
    }
    if (p.size() == 0) return {0.0, 0.0};
    require_matching_lambda(p, params, "stein_transfer_both_sides");

    const DistTable pw = poisson_binomial_pmf(p);
    double lhs = 0.0;
    for (std::size_t k = 0; k < pw.pmf.size(); ++k) {
        lhs += pw.pmf[k] * stein_operator(params, static_cast<long long>(k));
    }

    double rhs = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        // Leave-one-out pmf, recomputed from scratch per j; deconvolving the
        // full table would be cheaper but can be unstable.
        std::vector<double> rest;
        rest.reserve(p.size() - 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i != j) rest.push_back(p.probs()[i]);
        }
        const DistTable vj = poisson_binomial_pmf(ProbVector(rest));
        const double pj = p.probs()[j];
        rhs += pj * pj * expected_delta_f(vj, params);
    }
    return {lhs, rhs};
}

double chen_stein_quotient(const ProbVector& p, const SteinParams& params,
                           long long trunc_k) {
    require_valid(params, "chen_stein_quotient");
    require_matching_lambda(p, params, "chen_stein_quotient");
    if (trunc_k < 0) trunc_k = default_sup_trunc(params);
    const double denom = 2.0 * stein_operator_sup(params, trunc_k);
    if (denom == 0.0) {
        throw std::invalid_argument("chen_stein_quotient: degenerate params "
                                    "(stein operator vanishes identically)");
    }
    const double numer = stein_transfer_both_sides(p, params).second;
    return numer / denom;
}

}  // namespace tvbounds
