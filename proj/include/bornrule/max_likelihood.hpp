#pragma once

#include <cstddef>
#include <vector>

#include "bornrule/state_sampling.hpp"

namespace bornrule {

/// Relative deviations from equal amplitudes: r_k = sqrt(1/n) (1 + delta_k).
struct DeviationProfile {
    std::vector<double> deltas;
    double rms = 0.0;  ///< sqrt(mean(delta_k^2))

    [[nodiscard]] double max_abs() const noexcept;
    /// sum(delta_k) + sum(delta_k^2)/2; exactly zero for a unit-norm profile
    /// in exact arithmetic.
    [[nodiscard]] double normalization_residual() const noexcept;
};

/// Equal-amplitude profile, the maximizer of the class volume.
RadialProfile ml_profile(std::size_t n);

DeviationProfile deviations(const RadialProfile& profile);

/// sum_k log(sqrt(n) r_k): log of the class weight relative to the
/// equal-amplitude maximum. Always <= 0; -infinity if any radius is zero.
double log_likelihood_ratio(const RadialProfile& profile);

/// Second-order expansion of log_likelihood_ratio for a unit-norm profile:
/// sum log(1 + delta_k) = sum delta_k - sum delta_k^2 / 2 + O(delta^3), and the
/// norm identity sum delta_k = -sum delta_k^2 / 2 leave -n rms^2. The cubic
/// remainder is at most 0.39 n max|delta_k|^3 for max|delta_k| <= 0.05.
double log_likelihood_second_order(const DeviationProfile& dev);

/// (3n)^(-1/2): width of the Gaussian exp(-(3/2) n delta^2). Note that the
/// exact second-order weight above is exp(-n delta^2), of width (2n)^(-1/2).
double gaussian_width(std::size_t n);

}  // namespace bornrule
