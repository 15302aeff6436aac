#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bornrule/estimate.hpp"
#include "bornrule/state_sampling.hpp"

namespace bornrule {

inline constexpr double kDefaultEpsilon = 0.05;
inline constexpr double kMaxEpsilon = 0.2;

/// A phase-equivalence class: all states whose radial profile lies within
/// `epsilon` of `profile`.
struct EquivalenceClassSpec {
    RadialProfile profile;
    double epsilon = kDefaultEpsilon;

    EquivalenceClassSpec(RadialProfile p, double eps);
};

/// Volume of the n-ball of radius eps: pi^(n/2) eps^n / Gamma(n/2 + 1).
double ball_volume(std::size_t n, double eps);

/// Product of the radii; the class volume up to an n- and eps-dependent
/// constant. Zero when any radius is zero.
double relative_weight(const RadialProfile& profile);

/// (4 eps)^-1 (2 pi)^n V_ball(n, eps), the factor multiplying the product of
/// radii in the small-eps class volume.
double volume_prefactor(std::size_t n, double eps);

/// Small-eps class volume: volume_prefactor(n, eps) * relative_weight.
double volume_closed_form(const EquivalenceClassSpec& spec);

/// Fraction of Haar-random states whose radial profile lies strictly within
/// epsilon of spec.profile.
Estimate volume_monte_carlo(const EquivalenceClassSpec& spec, std::uint64_t trials, std::uint64_t seed,
                            unsigned workers = 0);

/// Several classes of equal dimension estimated on one shared set of samples.
/// Used for ratios and nested-epsilon comparisons.
std::vector<Estimate> volume_monte_carlo(std::span<const EquivalenceClassSpec> specs, std::uint64_t trials,
                                         std::uint64_t seed, unsigned workers = 0);

}  // namespace bornrule
