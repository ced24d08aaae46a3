// Exact pmfs for Poisson-binomial and Poisson distributions, and the exact
// total variation distance between them.
#pragma once

#include <cstddef>
#include <vector>

namespace tvbounds {

inline constexpr std::size_t kDefaultExactTvLimit = 5000;

// Ordered list of Bernoulli success probabilities p_1..p_n.  Construction
// validates every entry into [0,1]; lambda = sum p_i and sum_p2 = sum p_i^2
// are fixed at construction.
class ProbVector {
  public:
    ProbVector() = default;
    explicit ProbVector(std::vector<double> probs);

    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return probs_.size(); }
    double lambda() const { return lambda_; }
    double sum_p2() const { return sum_p2_; }

  private:
    std::vector<double> probs_;
    double lambda_ = 0.0;
    double sum_p2_ = 0.0;
};

// Finite pmf over the integer support [0, support_max] plus an upper bound on
// the probability mass above support_max.
struct DistTable {
    std::vector<double> pmf;
    double tail_mass_bound = 0.0;

    std::size_t support_max() const { return pmf.empty() ? 0 : pmf.size() - 1; }
};

// Exact pmf of W = sum of independent Bernoulli(p_i) by iterative
// convolution; after item i the table has support [0, i].  The empty product
// yields the point mass at 0.  tail_mass_bound is 0 (the support is complete).
DistTable poisson_binomial_pmf(const ProbVector& p);

// Poisson(lambda) pmf on [0, support_max], each entry computed in log space
// as exp(k ln lambda - lambda - lgamma(k+1)).  tail_mass_bound is Pr[Z > K]
// evaluated by direct series summation (see poisson_tail_above), never
// negative.
DistTable poisson_pmf(double lambda, std::size_t support_max);

// Pr[Z > n] for Z ~ Po(lambda).  Sums whichever of the two series (head or
// tail) is the small one, seeding the term recurrence in log space at the
// largest term, so there is no subtractive cancellation in either regime.
double poisson_tail_above(double lambda, long long n);

// d_TV(P, Q) = (1/2) sum_k |P(k) - Q(k)| over the zero-padded common support
// plus (1/2)(tail_P + tail_Q).  Exact whenever at most one table has hidden
// tail mass (then |P - Q| above the cut equals that tail pointwise).
double total_variation(const DistTable& P, const DistTable& Q);

// d_TV(P_W, Po(lambda)) computed exactly: P_W lives on [0, n], so the value
// is (1/2)(sum_{k<=n} |P_W(k) - Po(k)| + Pr[Z > n]).  Throws when n exceeds
// the exact-computation limit.
double exact_tv_poisson_approx(const ProbVector& p,
                               std::size_t limit = kDefaultExactTvLimit);

}  // namespace tvbounds
