#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "bornrule/error.hpp"
#include "bornrule/oracles.hpp"
#include "bornrule/state_sampling.hpp"

using namespace bornrule;
using namespace std::complex_literals;

namespace {

double norm2(const StateVector& psi) {
    double s = 0.0;
    for (const auto& c : psi.amps()) s += std::norm(c);
    return s;
}

// |c_1|^2 of a Haar state is Beta(1, n-1): F(x) = 1 - (1-x)^(n-1).
auto beta_1_cdf(std::size_t n) {
    return [n](double x) { return 1.0 - std::pow(1.0 - x, static_cast<double>(n - 1)); };
}

Eigen::MatrixXcd random_unitary(std::size_t n, Stream& rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = {g(rng), g(rng)};
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

}  // namespace

TEST_CASE("sample_state rejects zero dimension") {
    Stream rng(1);
    CHECK_THROWS_AS(sample_state(0, rng), InvalidDimension);
}

TEST_CASE("sample_state in one dimension has unit modulus") {
    Stream rng(2);
    for (int i = 0; i < 100; ++i) {
        const auto psi = sample_state(1, rng);
        CHECK(std::abs(psi[0]) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("sampled states satisfy the normalization invariant") {
    Stream rng(3);
    for (std::size_t n : {1U, 2U, 7U, 50U}) {
        for (int i = 0; i < 200; ++i) CHECK(std::abs(norm2(sample_state(n, rng)) - 1.0) <= kNormTolerance);
    }
}

TEST_CASE("sample_state is reproducible from the seed") {
    Stream a(99), b(99);
    const auto x = sample_state(5, a);
    const auto y = sample_state(5, b);
    for (std::size_t k = 0; k < 5; ++k) CHECK(x[k] == y[k]);
}

TEST_CASE("mean of |c_1|^2 at n=2 is 1/2") {
    Stream rng(4);
    const int samples = 1'000'000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double w = std::norm(sample_state(2, rng)[0]);
        sum += w;
        sum2 += w * w;
    }
    const double mean = sum / samples;
    const double se = std::sqrt((sum2 / samples - mean * mean) / samples);
    CHECK(std::abs(mean - 0.5) <= 3.0 * se);
}

TEST_CASE("|c_1|^2 at n=5 follows Beta(1, n-1)") {
    Stream rng(5);
    std::vector<double> w;
    for (int i = 0; i < 100'000; ++i) w.push_back(std::norm(sample_state(5, rng)[0]));
    CHECK(oracle::ks_statistic(w, beta_1_cdf(5)) < oracle::ks_critical(0.01, w.size()));
}

TEST_CASE("sample_radii matches the moduli of sample_state") {
    Stream a(6), b(6);
    std::vector<double> radii;
    for (int i = 0; i < 50; ++i) {
        const auto psi = sample_state(4, a);
        sample_radii(4, b, radii);
        for (std::size_t k = 0; k < 4; ++k) CHECK(radii[k] == doctest::Approx(std::abs(psi[k])).epsilon(1e-14));
    }
}

TEST_CASE("radial profile is invariant under a fixed random unitary") {
    Stream rng(7);
    const std::size_t n = 4;
    const auto u = random_unitary(n, rng);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).norm() < 1e-12);

    std::vector<double> rotated;
    for (int i = 0; i < 100'000; ++i) {
        const auto psi = sample_state(n, rng);
        Eigen::VectorXcd v(n);
        for (std::size_t k = 0; k < n; ++k) v(static_cast<Eigen::Index>(k)) = psi[k];
        const Eigen::VectorXcd w = u * v;
        rotated.push_back(std::norm(w(0)));
    }
    CHECK(oracle::ks_statistic(rotated, beta_1_cdf(n)) < oracle::ks_critical(0.01, rotated.size()));
}

TEST_CASE("radial_profile strips phases") {
    SUBCASE("basis vector") {
        const auto r = radial_profile(StateVector({1.0, 0.0}));
        CHECK(r[0] == 1.0);
        CHECK(r[1] == 0.0);
    }
    SUBCASE("imaginary and negative amplitudes") {
        const double h = std::sqrt(0.5);
        const auto r = radial_profile(StateVector({1i * h, -h}));
        CHECK(r[0] == doctest::Approx(h));
        CHECK(r[1] == doctest::Approx(h));
    }
    SUBCASE("general phases") {
        const auto r = radial_profile(StateVector({std::polar(0.6, 1.3), std::polar(0.8, -0.2)}));
        CHECK(r[0] == doctest::Approx(0.6).epsilon(1e-14));
        CHECK(r[1] == doctest::Approx(0.8).epsilon(1e-14));
    }
}

TEST_CASE("normalized types validate their invariants") {
    CHECK_THROWS_AS(StateVector({}), InvalidDimension);
    CHECK_THROWS_AS(StateVector({1.0, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(RadialProfile({-0.1, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(RadialProfile::normalized({0.0, 0.0}), InvalidArgument);
    CHECK(RadialProfile::normalized({3.0, 4.0})[1] == doctest::Approx(0.8));
}

TEST_CASE("phase_distance examples") {
    Stream rng(8);
    SUBCASE("zero on phase-rotated copies") {
        for (int i = 0; i < 20; ++i) {
            const auto psi = sample_state(5, rng);
            std::vector<Amplitude> rotated;
            for (const auto& c : psi.amps()) rotated.push_back(c * std::polar(1.0, 6.0 * uniform_open(rng)));
            CHECK(phase_distance(psi, StateVector(rotated)) < 1e-15);
        }
    }
    SUBCASE("disjoint support") {
        CHECK(phase_distance(StateVector({1.0, 0.0}), StateVector({0.0, 1.0})) == doctest::Approx(std::sqrt(2.0)));
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(phase_distance(StateVector({1.0}), StateVector({1.0, 0.0})), DimensionMismatch);
    }
}

TEST_CASE("phase_distance agrees with a brute-force phase search") {
    Stream rng(9);
    for (int i = 0; i < 3; ++i) {
        const auto psi = sample_state(3, rng);
        const auto phi = sample_state(3, rng);
        CHECK(std::abs(phase_distance(psi, phi) - oracle::search_phase_distance(psi, phi)) <= 1e-6);
    }
}

TEST_CASE("phase_distance is a pseudometric bounded by the Euclidean distance") {
    Stream rng(10);
    for (int i = 0; i < 500; ++i) {
        const auto a = sample_state(4, rng);
        const auto b = sample_state(4, rng);
        const auto c = sample_state(4, rng);
        const double ab = phase_distance(a, b);
        CHECK(ab == phase_distance(b, a));
        CHECK(phase_distance(a, c) <= ab + phase_distance(b, c) + 1e-15);
        double euclid = 0.0;
        for (std::size_t k = 0; k < 4; ++k) euclid += std::norm(a[k] - b[k]);
        CHECK(ab <= std::sqrt(euclid) + 1e-15);
        CHECK(phase_distance(a, a) == 0.0);
    }
}
