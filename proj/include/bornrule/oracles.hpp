#pragma once

// Independent reference computations. Each one reaches its answer by brute
// force or enumeration and shares no code path with the routine it checks.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bornrule/state_sampling.hpp"

namespace bornrule::oracle {

/// Scans every cell in the bounding box of the circle and counts those whose
/// center lies in the band r - d/2 <= |center| < r + d/2.
std::uint64_t scan_circle_cells(double r, double d);

/// Scans every cell in the bounding box and counts closed squares whose
/// nearest point lies inside and farthest corner lies outside the circle.
std::uint64_t scan_intersected_cells(double r, double d);

/// log of the L/R class weight evaluated from the product of Eq.-style
/// factors a^m m^{-m/2} b^{n-m} (n-m)^{-(n-m)/2}, one m at a time.
std::vector<double> partition_log_weights(std::size_t n, double amp_l, double amp_r);

/// First index of the maximum of partition_log_weights over m = 1..n-1.
std::size_t scan_optimal_partition(std::size_t n, double amp_l, double amp_r);

/// Minimum over phases theta_k of || (e^{i theta_k} phi_k) - psi ||, found by
/// a coarse grid over the n-torus followed by shrinking local grids.
double search_phase_distance(const StateVector& psi, const StateVector& phi, double coarse_step = 0.05,
                             double fine_step = 1e-3);

/// Kolmogorov-Smirnov statistic sup |F_emp - F| of `samples` against `cdf`.
template <class Cdf>
double ks_statistic(std::vector<double> samples, Cdf cdf);

/// Asymptotic KS critical value at level alpha for sample size m:
/// sqrt(-log(alpha/2)/2) / sqrt(m).
double ks_critical(double alpha, std::size_t m);

}  // namespace bornrule::oracle

#include <algorithm>

template <class Cdf>
double bornrule::oracle::ks_statistic(std::vector<double> samples, Cdf cdf) {
    std::sort(samples.begin(), samples.end());
    const double m = static_cast<double>(samples.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        worst = std::max({worst, static_cast<double>(i + 1) / m - f, f - static_cast<double>(i) / m});
    }
    return worst;
}
