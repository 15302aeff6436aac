#pragma once

#include <cstddef>
#include <cstdint>

#include "bornrule/estimate.hpp"
#include "bornrule/random.hpp"

namespace bornrule {

/// Gumbel law of maximal pore-molecule elongations,
/// F(phi) = exp(-exp(-(phi - mu)/sigma)).
struct GumbelParams {
    double mu = 0.0;
    double sigma = 1.0;

    void validate() const;  ///< sigma must be positive and finite
};

/// Probability question: among n i.i.d. elongations, does the largest exceed
/// the second largest by more than `margin`?
struct SelectivityQuery {
    std::size_t n = 2;
    double margin = 0.0;
    GumbelParams params;

    void validate() const;
    [[nodiscard]] double scaled_margin() const noexcept { return margin / params.sigma; }
};

/// Tunnel amplitude grows as exp(kappa * phi).
struct TunnelBarrier {
    double kappa = 1.0;
};

double gumbel_cdf(double phi, const GumbelParams& params);

/// Inverse-CDF draw mu - sigma log(-log U) with U strictly inside (0, 1).
double gumbel_sample(const GumbelParams& params, Stream& rng);

/// Winner index with the largest and second-largest of n draws. Found in a
/// single pass; for n == 1 the runner-up is -infinity.
struct TopTwo {
    std::size_t winner = 0;
    double first = 0.0;
    double second = 0.0;

    [[nodiscard]] double gap() const noexcept { return first - second; }
};

TopTwo draw_top_two(std::size_t n, const GumbelParams& params, Stream& rng);

/// p(n, a) = 1 / ((1 - 1/n) e^{a/sigma} + 1/n).
double selectivity_closed_form(const SelectivityQuery& q);

/// 1 - p(n, a), evaluated without cancellation.
double fault_probability(const SelectivityQuery& q);

/// n -> infinity limit of p(n, a): exp(-a/sigma).
double selectivity_limit(double scaled_margin);

/// 1 - (1 - 1/n) a/sigma.
double selectivity_first_order(const SelectivityQuery& q);

/// Fraction of trials in which the top elongation of n draws beats the
/// runner-up by more than the margin.
Estimate selectivity_monte_carlo(const SelectivityQuery& q, std::uint64_t trials, std::uint64_t seed,
                                 unsigned workers = 0);

/// exp(kappa (winner - runner_up)): dominance of the winning tunnel
/// amplitude. Throws InvalidArgument if winner_phi < runner_up_phi.
double amplitude_ratio(double winner_phi, double runner_up_phi, const TunnelBarrier& barrier);

}  // namespace bornrule
