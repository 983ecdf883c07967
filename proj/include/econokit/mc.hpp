#pragma once

#include <atomic>
#include <cstdint>

#include "econokit/parallel.hpp"
#include "econokit/rng.hpp"

namespace econokit::mc {

struct RunStats {
    std::size_t successes = 0;
    std::size_t runs = 0;

    [[nodiscard]] double rate() const {
        return runs == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(runs);
    }
};

/// Monte Carlo batch driver: fn(run_index, run_seed) -> bool, with run seeds
/// from derive_seed(base_seed, run_index). Counting is order-independent, so
/// the parallel policy reproduces the serial counts exactly.
template <typename Fn>
RunStats count_successes(std::uint64_t base_seed, std::size_t runs,
                         parallel::Exec exec, Fn&& fn) {
    std::atomic<std::size_t> successes{0};
    parallel::for_each_index(runs, exec, [&](std::size_t i) {
        if (fn(i, derive_seed(base_seed, i))) {
            successes.fetch_add(1, std::memory_order_relaxed);
        }
    });
    return RunStats{successes.load(), runs};
}

}  // namespace econokit::mc
