#pragma once

#include <cstdint>
#include <numbers>

#include <cmath>

namespace econokit {

/// SplitMix64 step; used for seeding and for deriving per-run seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed for Monte Carlo run `run_index` under a base seed: the base is XORed
/// with the run index scaled by the 64-bit golden ratio, then passed through
/// one SplitMix64 step. Runs are independent of thread scheduling, so
/// parallel experiments reproduce the serial results.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t run_index) {
    std::uint64_t s = base ^ (0x9E3779B97F4A7C15ULL * (run_index + 1));
    return splitmix64(s);
}

/// xoshiro256++ with SplitMix64 seeding. Fixed, portable semantics: the same
/// seed yields the same stream on every platform, which keeps simulated data
/// and Monte Carlo thresholds stable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller on the uniform stream. Draws two
    /// uniforms per pair and caches the second variate, so consumption of
    /// the underlying stream is fully determined by the number of calls.
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        if (u1 <= 0.0) u1 = 0x1.0p-53;  // log(0) guard; probability 2^-53
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4]{};
    double spare_ = 0;
    bool have_spare_ = false;
};

}  // namespace econokit
