#pragma once

#include <cmath>
#include <cstdint>

namespace bornrule {

/// Monte Carlo result: a binomial proportion and its standard error.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    std::uint64_t seed = 0;

    /// True when no trial landed in the target set; value is then 0 and the
    /// caller should raise the trial count or widen the target.
    [[nodiscard]] bool never_hit() const noexcept { return hits == 0; }

    static Estimate from_counts(std::uint64_t hits, std::uint64_t trials, std::uint64_t seed) {
        Estimate e;
        e.trials = trials;
        e.hits = hits;
        e.seed = seed;
        if (trials > 0) {
            e.value = static_cast<double>(hits) / static_cast<double>(trials);
            e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(trials));
        }
        return e;
    }
};

/// Ratio of two independent estimates with first-order propagated error.
struct RatioEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

inline RatioEstimate ratio(const Estimate& num, const Estimate& den) {
    RatioEstimate r;
    if (den.value <= 0.0 || num.value <= 0.0) {
        r.value = den.value > 0.0 ? 0.0 : INFINITY;
        r.std_error = INFINITY;
        return r;
    }
    r.value = num.value / den.value;
    const double a = num.std_error / num.value;
    const double b = den.std_error / den.value;
    r.std_error = r.value * std::sqrt(a * a + b * b);
    return r;
}

}  // namespace bornrule
