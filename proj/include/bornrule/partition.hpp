#pragma once

#include <cstddef>

#include "bornrule/state_sampling.hpp"

namespace bornrule {

/// Split of n auxiliary states into m states entangled with the L outcome
/// and n - m with the R outcome, for an object state amp_l|L> + amp_r|R>.
struct PartitionSpec {
    std::size_t m = 0;
    std::size_t n = 0;
    double amp_l = 0.0;
    double amp_r = 0.0;

    /// Checks 0 <= m <= n, n >= 1, amplitudes nonnegative and normalized.
    /// Throws InvalidArgument.
    void validate() const;
    /// Also requires m >= 1 when amp_l > 0 and m <= n - 1 when amp_r > 0.
    /// Throws InfeasiblePartition.
    void require_feasible() const;
};

/// Most likely radial profile under fixed branch weights: the first m entries
/// amp_l/sqrt(m), the remaining n - m entries amp_r/sqrt(n - m).
struct BranchProfile {
    RadialProfile profile;
    std::size_t m = 0;

    [[nodiscard]] double l_weight() const noexcept;  ///< sum of squares over the first m entries
    [[nodiscard]] double r_weight() const noexcept;  ///< sum of squares over the rest
    /// Largest over smallest nonzero entry; 1 for equal amplitudes.
    [[nodiscard]] double spread() const noexcept;
};

BranchProfile ml_branch_profile(const PartitionSpec& spec);

/// m log(amp_l/sqrt(m)) + (n-m) log(amp_r/sqrt(n-m)), with empty blocks
/// contributing zero.
double log_partition_weight(const PartitionSpec& spec);

/// d/dm of log_partition_weight treating m as continuous on (0, n).
double log_weight_derivative(double m, std::size_t n, double amp_l, double amp_r);

/// Root of log_weight_derivative: n amp_l^2 / (amp_l^2 + amp_r^2).
double stationary_partition(std::size_t n, double amp_l, double amp_r);

/// Integer m maximizing log_partition_weight by exhaustive scan over the
/// feasible range; ties go to the smaller m. Returns 0 or n directly when one
/// amplitude vanishes.
std::size_t optimal_partition(std::size_t n, double amp_l, double amp_r);

}  // namespace bornrule
