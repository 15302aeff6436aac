#include "bornrule/measurement.hpp"

#include <cmath>

#include "bornrule/error.hpp"
#include "bornrule/parallel.hpp"
#include "bornrule/partition.hpp"
#include "bornrule/state_sampling.hpp"

namespace bornrule {

MeasurementConfig MeasurementConfig::from_born_weight(double asq, std::size_t n) {
    if (!(asq >= 0.0 && asq <= 1.0)) throw InvalidArgument("MeasurementConfig: |a|^2 must lie in [0, 1]");
    MeasurementConfig c;
    c.amp_l = std::sqrt(asq);
    c.amp_r = std::sqrt(1.0 - asq);
    c.n = n;
    return c;
}

void MeasurementConfig::validate() const {
    if (!(amp_l >= 0.0) || !(amp_r >= 0.0)) throw InvalidArgument("MeasurementConfig: amplitudes must be >= 0");
    if (!(std::abs(amp_l * amp_l + amp_r * amp_r - 1.0) <= kNormTolerance)) {
        throw InvalidArgument("MeasurementConfig: amp_l^2 + amp_r^2 must equal 1");
    }
    if (n < 2) throw InvalidDimension("MeasurementConfig: n must be at least 2");
    if (trials < 1) throw InvalidArgument("MeasurementConfig: trials must be at least 1");
    if (!(margin >= 0.0)) throw InvalidArgument("MeasurementConfig: margin must be >= 0");
    params.validate();
}

TrialOutcome run_trial(const MeasurementConfig& config, std::size_t m_star, Stream& rng) {
    const TopTwo top = draw_top_two(config.n, config.params, rng);
    TrialOutcome out;
    out.winner_index = top.winner + 1;
    out.outcome = out.winner_index <= m_star ? Outcome::L : Outcome::R;
    out.gap = top.gap();
    out.selective = out.gap > config.margin;
    return out;
}

namespace {

struct Tally {
    std::uint64_t l = 0;
    std::uint64_t r = 0;
    std::uint64_t selective = 0;
    double gap_sum = 0.0;

    void merge(const Tally& o) {
        l += o.l;
        r += o.r;
        selective += o.selective;
        gap_sum += o.gap_sum;
    }
};

}  // namespace

BornReport run_measurement(const MeasurementConfig& config, unsigned workers) {
    config.validate();
    const std::size_t m_star = optimal_partition(config.n, config.amp_l, config.amp_r);
    const auto tally = run_trials<Tally>(config.trials, config.seed, workers,
                                         [&](std::uint64_t, Stream& rng, Tally& acc) {
                                             const auto t = run_trial(config, m_star, rng);
                                             (t.outcome == Outcome::L ? acc.l : acc.r) += 1;
                                             if (t.selective) ++acc.selective;
                                             acc.gap_sum += t.gap;
                                         });

    BornReport rep;
    const auto trials = static_cast<double>(config.trials);
    rep.l_count = tally.l;
    rep.r_count = tally.r;
    rep.p_l_empirical = static_cast<double>(tally.l) / trials;
    rep.p_r_empirical = static_cast<double>(tally.r) / trials;
    rep.std_error = std::sqrt(rep.p_l_empirical * (1.0 - rep.p_l_empirical) / trials);
    rep.selective_fraction = static_cast<double>(tally.selective) / trials;
    rep.selective_std_error = std::sqrt(rep.selective_fraction * (1.0 - rep.selective_fraction) / trials);
    rep.mean_gap = tally.gap_sum / trials;
    rep.m_star = m_star;
    rep.n = config.n;
    rep.trials = config.trials;
    rep.seed = config.seed;
    return rep;
}

std::vector<BornCurveRow> born_deviation_curve(std::span<const double> born_weights, std::size_t n,
                                               std::uint64_t trials, std::uint64_t seed,
                                               const GumbelParams& params, double margin, unsigned workers) {
    std::vector<BornCurveRow> rows;
    rows.reserve(born_weights.size());
    for (double asq : born_weights) {
        auto config = MeasurementConfig::from_born_weight(asq, n);
        config.trials = trials;
        config.seed = seed;
        config.params = params;
        config.margin = margin;
        const auto rep = run_measurement(config, workers);
        BornCurveRow row;
        row.born_weight = asq;
        row.partition_ratio = static_cast<double>(rep.m_star) / static_cast<double>(n);
        row.p_l_empirical = rep.p_l_empirical;
        row.std_error = rep.std_error;
        row.discretization_error = std::abs(row.partition_ratio - asq);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace bornrule
