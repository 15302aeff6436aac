#include <doctest.h>

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "bornrule/equivalence_volume.hpp"
#include "bornrule/parallel.hpp"
#include "bornrule/selectivity.hpp"

using namespace bornrule;

namespace {

struct Sum {
    double total = 0.0;
    std::uint64_t count = 0;
    void merge(const Sum& o) {
        total += o.total;
        count += o.count;
    }
};

}  // namespace

TEST_CASE("trial results do not depend on the worker count") {
    auto body = [](std::uint64_t, Stream& rng, Sum& acc) {
        acc.total += uniform_open(rng);
        ++acc.count;
    };
    const auto one = run_trials<Sum>(50'000, 7, 1, body);
    for (unsigned w : {2U, 3U, 8U}) {
        const auto many = run_trials<Sum>(50'000, 7, w, body);
        CHECK(many.count == 50'000);
        CHECK(std::memcmp(&many.total, &one.total, sizeof(double)) == 0);
    }
}

TEST_CASE("substreams differ across trials and seeds") {
    CHECK(substream(1, 0)() != substream(1, 1)());
    CHECK(substream(1, 0)() != substream(2, 0)());
    CHECK(substream(5, 9)() == substream(5, 9)());
}

TEST_CASE("worker exceptions propagate") {
    auto body = [](std::uint64_t t, Stream&, Sum&) {
        if (t == 10'000) throw std::runtime_error("boom");
    };
    CHECK_THROWS_AS(run_trials<Sum>(20'000, 1, 4, body), std::runtime_error);
}

TEST_CASE("Monte Carlo estimators are reproducible across worker counts") {
    const SelectivityQuery q{7, 0.4, {0.0, 1.0}};
    const auto a = selectivity_monte_carlo(q, 30'000, 3, 1);
    const auto b = selectivity_monte_carlo(q, 30'000, 3, 4);
    CHECK(a.hits == b.hits);
    const EquivalenceClassSpec spec{RadialProfile::from_squares(std::vector<double>{0.5, 0.5}), 0.05};
    CHECK(volume_monte_carlo(spec, 30'000, 3, 1).hits == volume_monte_carlo(spec, 30'000, 3, 5).hits);
}
