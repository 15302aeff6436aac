#include "bornrule/equivalence_volume.hpp"

#include <cmath>
#include <numbers>

#include "bornrule/error.hpp"
#include "bornrule/parallel.hpp"

namespace bornrule {

EquivalenceClassSpec::EquivalenceClassSpec(RadialProfile p, double eps) : profile(std::move(p)), epsilon(eps) {
    if (!(epsilon > 0.0 && epsilon <= kMaxEpsilon)) {
        throw InvalidArgument("EquivalenceClassSpec: epsilon must lie in (0, 0.2]");
    }
}

double ball_volume(std::size_t n, double eps) {
    if (n == 0) throw InvalidDimension("ball_volume: dimension must be at least 1");
    if (!(eps > 0.0)) throw InvalidArgument("ball_volume: radius must be positive");
    const double half = 0.5 * static_cast<double>(n);
    return std::exp(half * std::log(std::numbers::pi) + static_cast<double>(n) * std::log(eps) -
                    std::lgamma(half + 1.0));
}

double relative_weight(const RadialProfile& profile) {
    double w = 1.0;
    for (double r : profile.radii()) w *= r;
    return w;
}

double volume_prefactor(std::size_t n, double eps) {
    return std::pow(2.0 * std::numbers::pi, static_cast<double>(n)) * ball_volume(n, eps) / (4.0 * eps);
}

double volume_closed_form(const EquivalenceClassSpec& spec) {
    return volume_prefactor(spec.profile.dim(), spec.epsilon) * relative_weight(spec.profile);
}

namespace {

struct HitCounts {
    std::vector<std::uint64_t> hits;
    void merge(const HitCounts& o) {
        if (hits.size() < o.hits.size()) hits.resize(o.hits.size(), 0);
        for (std::size_t i = 0; i < o.hits.size(); ++i) hits[i] += o.hits[i];
    }
};

}  // namespace

std::vector<Estimate> volume_monte_carlo(std::span<const EquivalenceClassSpec> specs, std::uint64_t trials,
                                         std::uint64_t seed, unsigned workers) {
    if (specs.empty()) return {};
    if (trials < 1000) throw InvalidArgument("volume_monte_carlo: at least 1000 trials required");
    const std::size_t n = specs.front().profile.dim();
    for (const auto& s : specs) {
        if (s.profile.dim() != n) throw DimensionMismatch("volume_monte_carlo: classes differ in dimension");
    }

    const auto counts = run_trials<HitCounts>(trials, seed, workers, [&](std::uint64_t, Stream& rng, HitCounts& acc) {
        thread_local std::vector<double> radii;
        if (acc.hits.empty()) acc.hits.assign(specs.size(), 0);
        sample_radii(n, rng, radii);
        for (std::size_t i = 0; i < specs.size(); ++i) {
            const double eps = specs[i].epsilon;
            double s = 0.0;
            const auto ref = specs[i].profile.radii();
            for (std::size_t k = 0; k < n; ++k) {
                const double d = radii[k] - ref[k];
                s += d * d;
            }
            if (s < eps * eps) ++acc.hits[i];
        }
    });

    std::vector<Estimate> out;
    out.reserve(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        out.push_back(Estimate::from_counts(i < counts.hits.size() ? counts.hits[i] : 0, trials, seed));
    }
    return out;
}

Estimate volume_monte_carlo(const EquivalenceClassSpec& spec, std::uint64_t trials, std::uint64_t seed,
                            unsigned workers) {
    return volume_monte_carlo(std::span<const EquivalenceClassSpec>(&spec, 1), trials, seed, workers).front();
}

}  // namespace bornrule
