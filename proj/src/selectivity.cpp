#include "bornrule/selectivity.hpp"

#include <cmath>
#include <limits>

#include "bornrule/error.hpp"
#include "bornrule/parallel.hpp"

namespace bornrule {

void GumbelParams::validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("GumbelParams: sigma must be positive");
    if (!std::isfinite(mu)) throw InvalidArgument("GumbelParams: mu must be finite");
}

void SelectivityQuery::validate() const {
    params.validate();
    if (n < 2) throw InvalidDimension("SelectivityQuery: n must be at least 2");
    if (!(margin >= 0.0) || !std::isfinite(margin)) throw InvalidArgument("SelectivityQuery: margin must be >= 0");
}

double gumbel_cdf(double phi, const GumbelParams& params) {
    return std::exp(-std::exp(-(phi - params.mu) / params.sigma));
}

double gumbel_sample(const GumbelParams& params, Stream& rng) {
    return params.mu - params.sigma * std::log(-std::log(uniform_open(rng)));
}

TopTwo draw_top_two(std::size_t n, const GumbelParams& params, Stream& rng) {
    TopTwo t;
    t.first = -std::numeric_limits<double>::infinity();
    t.second = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        const double phi = gumbel_sample(params, rng);
        if (phi > t.first) {
            t.second = t.first;
            t.first = phi;
            t.winner = k;
        } else if (phi > t.second) {
            t.second = phi;
        }
    }
    return t;
}

double selectivity_closed_form(const SelectivityQuery& q) {
    q.validate();
    const double c = 1.0 - 1.0 / static_cast<double>(q.n);
    return 1.0 / (1.0 + c * std::expm1(q.scaled_margin()));
}

double fault_probability(const SelectivityQuery& q) {
    q.validate();
    const double c = 1.0 - 1.0 / static_cast<double>(q.n);
    const double g = c * std::expm1(q.scaled_margin());
    return g / (1.0 + g);
}

double selectivity_limit(double scaled_margin) { return std::exp(-scaled_margin); }

double selectivity_first_order(const SelectivityQuery& q) {
    q.validate();
    return 1.0 - (1.0 - 1.0 / static_cast<double>(q.n)) * q.scaled_margin();
}

namespace {

struct Hits {
    std::uint64_t hits = 0;
    void merge(const Hits& o) { hits += o.hits; }
};

}  // namespace

Estimate selectivity_monte_carlo(const SelectivityQuery& q, std::uint64_t trials, std::uint64_t seed,
                                 unsigned workers) {
    q.validate();
    if (trials < 1000) throw InvalidArgument("selectivity_monte_carlo: at least 1000 trials required");
    const auto total = run_trials<Hits>(trials, seed, workers, [&](std::uint64_t, Stream& rng, Hits& acc) {
        if (draw_top_two(q.n, q.params, rng).gap() > q.margin) ++acc.hits;
    });
    return Estimate::from_counts(total.hits, trials, seed);
}

double amplitude_ratio(double winner_phi, double runner_up_phi, const TunnelBarrier& barrier) {
    if (!(barrier.kappa > 0.0)) throw InvalidArgument("amplitude_ratio: kappa must be positive");
    if (!(winner_phi >= runner_up_phi)) throw InvalidArgument("amplitude_ratio: winner must not trail runner-up");
    return std::exp(barrier.kappa * (winner_phi - runner_up_phi));
}

}  // namespace bornrule
