#pragma once

#include <cstdint>
#include <random>

namespace bornrule {

/// Deterministic random stream. Every sampling routine takes one explicitly.
using Stream = std::mt19937_64;

/// Default master seed used whenever the caller does not pick one.
inline constexpr std::uint64_t kDefaultSeed = 20031015;

/// SplitMix64 finalizer; decorrelates (seed, index) pairs before seeding.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent stream for trial `index` under `master_seed`. Results that
/// draw trial t from substream(seed, t) do not depend on how trials are
/// scheduled across workers.
inline Stream substream(std::uint64_t master_seed, std::uint64_t index) {
    return Stream{mix64(mix64(master_seed) ^ mix64(index + 0x632be59bd9b4e019ULL))};
}

/// Uniform draw on the open interval (0, 1); never returns 0 or 1.
inline double uniform_open(Stream& rng) {
    return (static_cast<double>(rng() >> 12) + 0.5) * 0x1.0p-52;
}

}  // namespace bornrule
