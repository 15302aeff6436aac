#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bornrule/equivalence_volume.hpp"
#include "bornrule/error.hpp"

using namespace bornrule;

TEST_CASE("ball_volume in low dimensions") {
    CHECK(ball_volume(1, 1.0) == doctest::Approx(2.0));
    CHECK(ball_volume(2, 1.0) == doctest::Approx(std::numbers::pi));
    CHECK(ball_volume(3, 0.5) == doctest::Approx(4.0 / 3.0 * std::numbers::pi * 0.125));
    CHECK(ball_volume(3, 0.5) == doctest::Approx(0.5236).epsilon(1e-4));
    CHECK_THROWS_AS(ball_volume(0, 1.0), InvalidDimension);
    CHECK_THROWS_AS(ball_volume(2, 0.0), InvalidArgument);
}

TEST_CASE("relative weight examples") {
    const double h = std::sqrt(0.5);
    CHECK(relative_weight(RadialProfile({h, h})) == doctest::Approx(0.5));
    CHECK(relative_weight(RadialProfile::from_squares(std::vector<double>{0.9, 0.1})) == doctest::Approx(0.3));
    CHECK(volume_closed_form({RadialProfile({1.0, 0.0}), 0.05}) == 0.0);
}

TEST_CASE("closed form carries the full prefactor") {
    const EquivalenceClassSpec spec{RadialProfile::from_squares(std::vector<double>{0.5, 0.5}), 0.1};
    const double expect = std::pow(2.0 * std::numbers::pi, 2) * std::numbers::pi * 0.01 / 0.4 * 0.5;
    CHECK(volume_closed_form(spec) == doctest::Approx(expect));
}

TEST_CASE("equal amplitudes maximize the closed-form volume at n=4") {
    Stream rng(11);
    const EquivalenceClassSpec equal{RadialProfile({0.5, 0.5, 0.5, 0.5}), 0.05};
    const double best = volume_closed_form(equal);
    std::vector<double> radii;
    for (int i = 0; i < 20'000; ++i) {
        sample_radii(4, rng, radii);
        CHECK(volume_closed_form({RadialProfile::normalized(radii), 0.05}) < best);
    }
}

TEST_CASE("closed form is invariant under permutations") {
    std::vector<double> r{0.1, 0.3, 0.5, std::sqrt(1.0 - 0.35)};
    const double ref = volume_closed_form({RadialProfile::normalized(r), 0.05});
    std::sort(r.begin(), r.end());
    do {
        CHECK(volume_closed_form({RadialProfile::normalized(r), 0.05}) == doctest::Approx(ref).epsilon(1e-14));
    } while (std::next_permutation(r.begin(), r.end()));
}

TEST_CASE("epsilon must be small") {
    CHECK_THROWS_AS(EquivalenceClassSpec(RadialProfile({1.0}), 0.3), InvalidArgument);
    CHECK_THROWS_AS(EquivalenceClassSpec(RadialProfile({1.0}), 0.0), InvalidArgument);
}

TEST_CASE("Monte Carlo volume edge cases") {
    SUBCASE("one dimension is always hit") {
        const auto e = volume_monte_carlo({RadialProfile({1.0}), 0.05}, 1000, 1);
        CHECK(e.value == 1.0);
        CHECK(e.hits == 1000);
    }
    SUBCASE("too few trials") {
        CHECK_THROWS_AS(volume_monte_carlo({RadialProfile({1.0}), 0.05}, 999, 1), InvalidArgument);
    }
    SUBCASE("axis profile is suppressed relative to equal amplitudes") {
        const std::vector<EquivalenceClassSpec> specs{{RadialProfile({1.0, 0.0}), 0.05},
                                                      {RadialProfile::from_squares(std::vector<double>{0.5, 0.5}), 0.05}};
        const auto e = volume_monte_carlo(specs, 200'000, 2);
        CHECK(e[0].value > 0.0);
        CHECK(e[0].value < e[1].value);
    }
    SUBCASE("unreachable class reports never_hit") {
        const auto e = volume_monte_carlo({RadialProfile({1.0, 0.0, 0.0, 0.0, 0.0, 0.0}), 0.001}, 1000, 3);
        CHECK(e.never_hit());
        CHECK(e.value == 0.0);
    }
}

TEST_CASE("Monte Carlo ratio matches the product-of-radii ratio") {
    const double third = 1.0 / 3.0;
    const std::vector<EquivalenceClassSpec> specs{
        {RadialProfile::from_squares(std::vector<double>{third, third, third}), 0.05},
        {RadialProfile::from_squares(std::vector<double>{0.8, 0.1, 0.1}), 0.05},
        {RadialProfile::from_squares(std::vector<double>{0.5, 0.3, 0.2}), 0.05},
    };
    const auto e = volume_monte_carlo(specs, 1'000'000, 12);
    for (std::size_t i = 1; i < specs.size(); ++i) {
        const auto mc = ratio(e[0], e[i]);
        const double expect = relative_weight(specs[0].profile) / relative_weight(specs[i].profile);
        CHECK(std::abs(mc.value - expect) <= 3.0 * mc.std_error);
    }
}

TEST_CASE("Monte Carlo volume is monotone in epsilon on common samples") {
    const auto p = RadialProfile::from_squares(std::vector<double>{0.5, 0.3, 0.2});
    std::vector<EquivalenceClassSpec> nested;
    for (double eps : {0.01, 0.02, 0.05, 0.1, 0.2}) nested.emplace_back(p, eps);
    const auto e = volume_monte_carlo(nested, 100'000, 13);
    for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i].hits >= e[i - 1].hits);
    // Single-class calls with the same seed see the same samples.
    CHECK(volume_monte_carlo(nested[2], 100'000, 13).hits == e[2].hits);
}
