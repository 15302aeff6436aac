#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "bornrule/error.hpp"
#include "bornrule/oracles.hpp"
#include "bornrule/partition.hpp"

using namespace bornrule;

namespace {

PartitionSpec spec_for(std::size_t m, std::size_t n, double asq) {
    return PartitionSpec{m, n, std::sqrt(asq), std::sqrt(1.0 - asq)};
}

}  // namespace

TEST_CASE("ml_branch_profile examples") {
    SUBCASE("all weight in L reduces to equal amplitudes") {
        const auto b = ml_branch_profile({5, 5, 1.0, 0.0});
        for (double r : b.profile.radii()) CHECK(r == doctest::Approx(std::sqrt(0.2)));
    }
    SUBCASE("symmetric split") {
        const auto b = ml_branch_profile(spec_for(2, 4, 0.5));
        for (double r : b.profile.radii()) CHECK(r == doctest::Approx(0.5));
    }
    SUBCASE("asymmetric split") {
        const auto b = ml_branch_profile(spec_for(3, 10, 0.36));
        for (std::size_t k = 0; k < 3; ++k) CHECK(b.profile[k] == doctest::Approx(0.3464101615137754).epsilon(1e-14));
        for (std::size_t k = 3; k < 10; ++k) CHECK(b.profile[k] == doctest::Approx(0.3023715784073818).epsilon(1e-14));
    }
}

TEST_CASE("branch weights are conserved") {
    for (std::size_t n : {2U, 7U, 100U, 1000U}) {
        for (double asq : {0.05, 0.3, 0.5, 0.77, 0.95}) {
            for (std::size_t m : {std::size_t{1}, n / 2, n - 1}) {
                const auto b = ml_branch_profile(spec_for(m, n, asq));
                CHECK(b.l_weight() == doctest::Approx(asq).epsilon(1e-14));
                CHECK(b.r_weight() == doctest::Approx(1.0 - asq).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("infeasible partitions are rejected") {
    CHECK_THROWS_AS(ml_branch_profile(spec_for(0, 5, 0.3)), InfeasiblePartition);
    CHECK_THROWS_AS(ml_branch_profile(spec_for(5, 5, 0.3)), InfeasiblePartition);
    CHECK_THROWS_AS(log_partition_weight(spec_for(0, 5, 0.3)), InfeasiblePartition);
    CHECK_THROWS_AS(ml_branch_profile({6, 5, 1.0, 0.0}), InvalidArgument);
    CHECK_THROWS_AS(ml_branch_profile({1, 5, 0.9, 0.9}), InvalidArgument);
}

TEST_CASE("log_partition_weight examples") {
    CHECK(log_partition_weight(spec_for(1, 2, 0.5)) == doctest::Approx(-std::log(2.0)));
    // Empty blocks contribute zero.
    CHECK(log_partition_weight({4, 4, 1.0, 0.0}) == doctest::Approx(4.0 * std::log(0.5)));
    CHECK(log_partition_weight({0, 4, 0.0, 1.0}) == doctest::Approx(4.0 * std::log(0.5)));
    // Zero amplitude on a nonempty block.
    CHECK(log_partition_weight({2, 4, 1.0, 0.0}) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("stationary point equalizes the branch amplitudes") {
    for (double asq : {0.1, 0.36, 0.5, 0.8}) {
        const double al = std::sqrt(asq), ar = std::sqrt(1.0 - asq);
        const double m = stationary_partition(100, al, ar);
        CHECK(m == doctest::Approx(100.0 * asq));
        CHECK(std::abs(log_weight_derivative(m, 100, al, ar)) < 1e-12);
        CHECK(al / std::sqrt(m) == doctest::Approx(ar / std::sqrt(100.0 - m)));
    }
}

TEST_CASE("log-weight derivative is strictly decreasing with its root at n |a|^2") {
    const std::size_t n = 250;
    const double asq = 0.37;
    const double al = std::sqrt(asq), ar = std::sqrt(1.0 - asq);
    double prev = std::numeric_limits<double>::infinity();
    for (double m = 0.5; m < 250.0; m += 0.5) {
        const double g = log_weight_derivative(m, n, al, ar);
        CHECK(g < prev);
        prev = g;
    }
    // Bisection for the root, independent of the closed form.
    double lo = 1e-9, hi = 250.0 - 1e-9;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (log_weight_derivative(mid, n, al, ar) > 0.0 ? lo : hi) = mid;
    }
    CHECK(lo == doctest::Approx(250.0 * asq).epsilon(1e-10));
}

TEST_CASE("optimal_partition examples") {
    CHECK(optimal_partition(100, std::sqrt(0.36), 0.8) == 36);
    CHECK(optimal_partition(1000, std::sqrt(0.3), std::sqrt(0.7)) == 300);
    CHECK(optimal_partition(10, 0.6, 0.8) == 4);
    CHECK(optimal_partition(8, 1.0, 0.0) == 8);
    CHECK(optimal_partition(8, 0.0, 1.0) == 0);
    for (std::size_t n : {2U, 4U, 10U, 1000U}) CHECK(optimal_partition(n, std::sqrt(0.5), std::sqrt(0.5)) == n / 2);
    CHECK_THROWS_AS(optimal_partition(1, 1.0, 0.0), InvalidDimension);
}

TEST_CASE("ties go to the smaller m") {
    const double h = std::sqrt(0.5);
    CHECK(optimal_partition(3, h, h) == 1);
    CHECK(optimal_partition(5, h, h) == 2);
    CHECK(optimal_partition(101, h, h) == 50);
}

TEST_CASE("optimal_partition matches the exhaustive oracle and recovers the Born weight") {
    for (std::size_t n : {100U, 137U, 500U, 1000U, 4096U}) {
        for (int k = 0; k <= 18; ++k) {
            const double asq = 0.05 + 0.05 * k;
            const double al = std::sqrt(asq), ar = std::sqrt(1.0 - asq);
            const auto m = optimal_partition(n, al, ar);
            const double nn = static_cast<double>(n);
            CHECK(m == oracle::scan_optimal_partition(n, al, ar));
            CHECK(std::abs(static_cast<double>(m) / nn - asq) <= 1.0 / nn);
            CHECK(ml_branch_profile({m, n, al, ar}).spread() <= 1.0 + 4.0 / std::sqrt(nn));
        }
    }
}

TEST_CASE("oracle argmax at n=100, |a|^2=0.36 is 36") {
    CHECK(oracle::scan_optimal_partition(100, 0.6, 0.8) == 36);
}
