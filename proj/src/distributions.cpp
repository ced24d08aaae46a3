#include "tvbounds/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tvbounds {

ProbVector::ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        const double p = probs_[i];
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("ProbVector: entry " + std::to_string(i) +
                                        " = " + std::to_string(p) +
                                        " outside [0,1]");
        }
    }
    for (double p : probs_) {
        lambda_ += p;
        sum_p2_ += p * p;
    }
}

DistTable poisson_binomial_pmf(const ProbVector& p) {
    const std::size_t n = p.size();
    std::vector<double> pmf(n + 1, 0.0);
    pmf[0] = 1.0;
    std::size_t top = 0;
    for (double pi : p.probs()) {
        // In-place convolution with Bernoulli(pi), descending k so that each
        // source entry is read before it is overwritten.
        for (std::size_t k = top + 1; k-- > 0;) {
            const double v = pmf[k];
            pmf[k + 1] += v * pi;
            pmf[k] = v * (1.0 - pi);
        }
        ++top;
    }
    return DistTable{std::move(pmf), 0.0};
}

namespace {

double poisson_log_pmf(double lambda, double k) {
    return k * std::log(lambda) - lambda - std::lgamma(k + 1.0);
}

}  // namespace

DistTable poisson_pmf(double lambda, std::size_t support_max) {
    if (!(lambda >= 0.0)) {
        throw std::invalid_argument("poisson_pmf: lambda must be >= 0");
    }
    std::vector<double> pmf(support_max + 1, 0.0);
    if (lambda == 0.0) {
        pmf[0] = 1.0;
        return DistTable{std::move(pmf), 0.0};
    }
    pmf[0] = std::exp(-lambda);
    for (std::size_t k = 1; k <= support_max; ++k) {
        pmf[k] = std::exp(poisson_log_pmf(lambda, static_cast<double>(k)));
    }
    return DistTable{std::move(pmf),
                     poisson_tail_above(lambda, static_cast<long long>(support_max))};
}

double poisson_tail_above(double lambda, long long n) {
    if (!(lambda >= 0.0)) {
        throw std::invalid_argument("poisson_tail_above: lambda must be >= 0");
    }
    if (n < 0) return 1.0;
    if (lambda == 0.0) return 0.0;

    const double mode = std::floor(lambda);
    if (static_cast<double>(n) >= mode) {
        // Tail terms decrease from k = n+1 on; seed at the largest one.
        double term = std::exp(poisson_log_pmf(lambda, static_cast<double>(n) + 1.0));
        double sum = 0.0;
        double k = static_cast<double>(n) + 1.0;
        while (term > 0.0) {
            sum += term;
            k += 1.0;
            term *= lambda / k;
            if (term < sum * 1e-20) break;
        }
        return sum;
    }
    // n below the mode: the head is the small series.  Its largest term is at
    // k = n; march down.  1 - head is free of cancellation because head < 1/2.
    double term = std::exp(poisson_log_pmf(lambda, static_cast<double>(n)));
    double head = 0.0;
    double k = static_cast<double>(n);
    while (true) {
        head += term;
        if (k < 1.0 || term == 0.0 || term < head * 1e-20) break;
        term *= k / lambda;
        k -= 1.0;
    }
    return std::max(0.0, 1.0 - head);
}

double total_variation(const DistTable& P, const DistTable& Q) {
    const std::size_t K = std::max(P.pmf.size(), Q.pmf.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        const double pk = k < P.pmf.size() ? P.pmf[k] : 0.0;
        const double qk = k < Q.pmf.size() ? Q.pmf[k] : 0.0;
        sum += std::abs(pk - qk);
    }
    const double tv = 0.5 * (sum + P.tail_mass_bound + Q.tail_mass_bound);
    return std::clamp(tv, 0.0, 1.0);
}

double exact_tv_poisson_approx(const ProbVector& p, std::size_t limit) {
    if (p.size() > limit) {
        throw std::invalid_argument(
            "exact_tv_poisson_approx: instance too large (n = " +
            std::to_string(p.size()) + ", limit = " + std::to_string(limit) + ")");
    }
    const DistTable pw = poisson_binomial_pmf(p);
    const DistTable po = poisson_pmf(p.lambda(), p.size());
    return total_variation(pw, po);
}

}  // namespace tvbounds
