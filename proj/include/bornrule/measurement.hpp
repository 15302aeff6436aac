#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bornrule/random.hpp"
#include "bornrule/selectivity.hpp"

namespace bornrule {

enum class Outcome { L, R };

struct MeasurementConfig {
    double amp_l = 1.0;
    double amp_r = 0.0;
    std::size_t n = 2;
    GumbelParams params;
    double margin = 0.0;
    std::uint64_t trials = 1;
    std::uint64_t seed = kDefaultSeed;

    /// Builds amplitudes sqrt(asq), sqrt(1 - asq) for a Born weight asq in [0, 1].
    static MeasurementConfig from_born_weight(double asq, std::size_t n);

    void validate() const;
};

struct TrialOutcome {
    std::size_t winner_index = 1;  ///< 1-based auxiliary state index
    Outcome outcome = Outcome::L;
    double gap = 0.0;  ///< largest minus second-largest elongation
    bool selective = false;
};

struct BornReport {
    double p_l_empirical = 0.0;
    double p_r_empirical = 0.0;
    double std_error = 0.0;  ///< sqrt(p (1 - p) / trials) for p_l
    double selective_fraction = 0.0;
    double selective_std_error = 0.0;
    double mean_gap = 0.0;
    std::uint64_t l_count = 0;
    std::uint64_t r_count = 0;
    std::size_t m_star = 0;
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// One simulated measurement: n i.i.d. Gumbel elongations, the largest wins,
/// and the outcome is L iff the winner lies in the first m_star states.
TrialOutcome run_trial(const MeasurementConfig& config, std::size_t m_star, Stream& rng);

/// Aggregates config.trials trials, trial t on substream(config.seed, t), with
/// m_star from optimal_partition.
BornReport run_measurement(const MeasurementConfig& config, unsigned workers = 0);

struct BornCurveRow {
    double born_weight = 0.0;      ///< |a|^2
    double partition_ratio = 0.0;  ///< m*/n
    double p_l_empirical = 0.0;
    double std_error = 0.0;
    double discretization_error = 0.0;  ///< |m*/n - |a|^2|
};

/// Sweeps Born weights in [0, 1] at fixed n; every row uses the same seed.
std::vector<BornCurveRow> born_deviation_curve(std::span<const double> born_weights, std::size_t n,
                                               std::uint64_t trials, std::uint64_t seed,
                                               const GumbelParams& params = {}, double margin = 0.0,
                                               unsigned workers = 0);

}  // namespace bornrule
