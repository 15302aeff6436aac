#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "bornrule/random.hpp"

namespace bornrule {

/// Trials per scheduling block. Partial results are folded block by block in
/// index order, so floating-point sums do not depend on the worker count.
inline constexpr std::uint64_t kTrialBlock = 4096;

/// Worker count used when the caller passes 0.
inline unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1U : hw;
}

/// Runs `trials` independent trials. Trial t receives substream(seed, t) and
/// updates a block-local accumulator via `trial(t, rng, acc)`; the block
/// accumulators are then merged in order with `acc.merge(other)`.
template <class Acc, class TrialFn>
Acc run_trials(std::uint64_t trials, std::uint64_t seed, unsigned workers, TrialFn&& trial) {
    const std::uint64_t blocks = (trials + kTrialBlock - 1) / kTrialBlock;
    std::vector<Acc> partial(blocks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        try {
            for (std::uint64_t b = next++; b < blocks; b = next++) {
                Acc acc{};
                const std::uint64_t end = std::min(trials, (b + 1) * kTrialBlock);
                for (std::uint64_t t = b * kTrialBlock; t < end; ++t) {
                    Stream rng = substream(seed, t);
                    trial(t, rng, acc);
                }
                partial[b] = std::move(acc);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (workers == 0) workers = default_workers();
    const auto n_threads = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(blocks, 1)));
    if (n_threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    Acc total{};
    for (auto& p : partial) total.merge(p);
    return total;
}

}  // namespace bornrule
