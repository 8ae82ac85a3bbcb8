#pragma once

// Seeded random primitives for the growth model: uniform integers, partial
// shuffles and Poisson variates (Knuth's multiplicative method).
//
// The generator is xoshiro256** (Blackman & Vigna, public-domain reference
// constants), seeded through SplitMix64. Both algorithms are defined purely
// over 64-bit unsigned arithmetic, so a given seed yields the same variate
// stream on every platform and compiler.

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "lambda3/errors.hpp"

namespace lambda3 {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {
        // SplitMix64 expansion of the seed into the 256-bit state.
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t seed() const { return seed_; }

    /// Independent stream for parallel use: seed XOR stream-index. States are
    /// single-owner; never share one Rng across threads.
    Rng derived(std::uint64_t stream_index) const { return Rng(seed_ ^ stream_index); }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). Unbiased via rejection.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound == 0) throw invalid_parameter("uniform_below: bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Poisson variate by Knuth's multiplicative method; expected O(lambda)
    /// iterations. lambda = 0 still consumes one uniform so variate streams
    /// stay position-stable across parameter choices.
    std::uint64_t poisson(double lambda) {
        if (!(lambda >= 0.0) || !std::isfinite(lambda))
            throw invalid_parameter("poisson: lambda must be finite and non-negative");
        const double threshold = std::exp(-lambda);
        std::uint64_t k = 0;
        double p = 1.0;
        do {
            p *= next_double();
            ++k;
        } while (p > threshold);
        return k - 1;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_{};
};

/// `count` distinct elements of `pool`, uniform over all count-subsets
/// (partial Fisher-Yates on a copy). Order is deterministic for a given
/// stream position but otherwise unspecified.
template <typename T>
std::vector<T> choose_without_replacement(Rng& rng, std::span<const T> pool, std::size_t count) {
    if (count > pool.size())
        throw invalid_parameter("choose_without_replacement: count exceeds pool size");
    std::vector<T> scratch(pool.begin(), pool.end());
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.uniform_below(scratch.size() - i));
        std::swap(scratch[i], scratch[j]);
    }
    scratch.resize(count);
    return scratch;
}

}  // namespace lambda3
