#include "bornrule/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bornrule/error.hpp"

namespace bornrule {

namespace {

void check_amplitudes(double amp_l, double amp_r) {
    if (!(amp_l >= 0.0) || !(amp_r >= 0.0)) throw InvalidArgument("partition: amplitudes must be nonnegative");
    if (!(std::abs(amp_l * amp_l + amp_r * amp_r - 1.0) <= kNormTolerance)) {
        throw InvalidArgument("partition: amp_l^2 + amp_r^2 must equal 1");
    }
}

// count * log(amp / sqrt(count)), zero for an empty block.
double block_term(std::size_t count, double amp) {
    if (count == 0) return 0.0;
    const double c = static_cast<double>(count);
    if (amp == 0.0) return -std::numeric_limits<double>::infinity();
    return c * (std::log(amp) - 0.5 * std::log(c));
}

}  // namespace

void PartitionSpec::validate() const {
    if (n == 0) throw InvalidDimension("PartitionSpec: n must be at least 1");
    if (m > n) throw InvalidArgument("PartitionSpec: m must not exceed n");
    check_amplitudes(amp_l, amp_r);
}

void PartitionSpec::require_feasible() const {
    validate();
    if (amp_l > 0.0 && m == 0) throw InfeasiblePartition("PartitionSpec: amp_l > 0 needs at least one L state");
    if (amp_r > 0.0 && m == n) throw InfeasiblePartition("PartitionSpec: amp_r > 0 needs at least one R state");
}

double BranchProfile::l_weight() const noexcept {
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) s += profile[k] * profile[k];
    return s;
}

double BranchProfile::r_weight() const noexcept {
    double s = 0.0;
    for (std::size_t k = m; k < profile.dim(); ++k) s += profile[k] * profile[k];
    return s;
}

double BranchProfile::spread() const noexcept {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (double r : profile.radii()) {
        if (r > 0.0) lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return hi / lo;
}

BranchProfile ml_branch_profile(const PartitionSpec& spec) {
    spec.require_feasible();
    std::vector<double> radii(spec.n, 0.0);
    if (spec.m > 0) {
        const double l = spec.amp_l / std::sqrt(static_cast<double>(spec.m));
        std::fill(radii.begin(), radii.begin() + static_cast<std::ptrdiff_t>(spec.m), l);
    }
    if (spec.m < spec.n) {
        const double r = spec.amp_r / std::sqrt(static_cast<double>(spec.n - spec.m));
        std::fill(radii.begin() + static_cast<std::ptrdiff_t>(spec.m), radii.end(), r);
    }
    return BranchProfile{RadialProfile(std::move(radii)), spec.m};
}

double log_partition_weight(const PartitionSpec& spec) {
    spec.require_feasible();
    return block_term(spec.m, spec.amp_l) + block_term(spec.n - spec.m, spec.amp_r);
}

double log_weight_derivative(double m, std::size_t n, double amp_l, double amp_r) {
    const double nn = static_cast<double>(n);
    if (!(m > 0.0 && m < nn)) throw InvalidArgument("log_weight_derivative: m must lie in (0, n)");
    return -0.5 * std::log(m) + 0.5 * std::log(nn - m) + std::log(amp_l) - std::log(amp_r);
}

double stationary_partition(std::size_t n, double amp_l, double amp_r) {
    const double l2 = amp_l * amp_l;
    return static_cast<double>(n) * l2 / (l2 + amp_r * amp_r);
}

std::size_t optimal_partition(std::size_t n, double amp_l, double amp_r) {
    if (n < 2) throw InvalidDimension("optimal_partition: n must be at least 2");
    check_amplitudes(amp_l, amp_r);
    if (amp_l == 0.0) return 0;
    if (amp_r == 0.0) return n;

    std::size_t best = 1;
    double best_weight = -std::numeric_limits<double>::infinity();
    for (std::size_t m = 1; m < n; ++m) {
        const double w = block_term(m, amp_l) + block_term(n - m, amp_r);
        // Weights equal up to rounding count as a tie and keep the smaller m.
        const double slack = 16.0 * std::numeric_limits<double>::epsilon() * (std::abs(w) + std::abs(best_weight));
        if (best_weight == -std::numeric_limits<double>::infinity() || w > best_weight + slack) {
            best_weight = w;
            best = m;
        }
    }
    return best;
}

}  // namespace bornrule
