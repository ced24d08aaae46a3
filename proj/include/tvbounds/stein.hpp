// Chen-Stein building blocks as executable checks: the tilted-Gaussian test
// function f, the Poisson characterizing identity E[lambda f(Z+1) - Z f(Z)] = 0,
// the transfer identity expressing that expectation under W through the
// leave-one-out sums V_j, and the resulting computable lower-bound quotient.
#pragma once

#include <cstddef>
#include <utility>

#include "tvbounds/distributions.hpp"

namespace tvbounds {

// Enumeration above this instance size is refused (exact pmfs of each V_j are
// recomputed per j, O(n^3) total).
inline constexpr std::size_t kSteinInstanceLimit = 20;

struct SteinParams {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double theta = 1.0;   // > 0, otherwise f is unbounded
    double lambda = 1.0;  // > 0
};

// f(k) = (k - alpha1) exp(-(k - alpha2)^2 / (theta lambda)).
double f_eval(const SteinParams& params, long long k);

// lambda f(k+1) - k f(k).
double stein_operator(const SteinParams& params, long long k);

// Truncation point for scanning sup_k |lambda f(k+1) - k f(k)|: past
// alpha2 + sqrt(theta lambda ln(1/eps)) the Gaussian factor dominates the
// linear prefactor; a fixed margin of 50 is added.
long long default_sup_trunc(const SteinParams& params);

// sup over k in [0, trunc_k] of |lambda f(k+1) - k f(k)|.  Throws when the
// decreasing-envelope check at the cut point fails (trunc_k too small).
double stein_operator_sup(const SteinParams& params, long long trunc_k);

// |sum_{k<=trunc_k} Po_lambda(k) (lambda f(k+1) - k f(k))|; zero up to
// truncation and roundoff.
double stein_identity_residual(const SteinParams& params, long long trunc_k);

// Both sides of the transfer identity
//   E[lambda f(W+1) - W f(W)] = sum_j p_j^2 E[f(V_j+2) - f(V_j+1)],
// evaluated through exact pmfs.  Requires params.lambda == sum p_i.
std::pair<double, double> stein_transfer_both_sides(const ProbVector& p,
                                                    const SteinParams& params);

// The computable lower-bound quotient
//   [sum_j p_j^2 E(f(V_j+2) - f(V_j+1))] / [2 sup_k |lambda f(k+1) - k f(k)|];
// exact_tv_poisson_approx(p) dominates it for every valid parameter choice.
// trunc_k < 0 selects default_sup_trunc.
double chen_stein_quotient(const ProbVector& p, const SteinParams& params,
                           long long trunc_k = -1);

}  // namespace tvbounds
