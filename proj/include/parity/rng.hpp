// Deterministic pseudo-random primitives. Everything downstream (generation,
// Monte-Carlo, sweeps) derives per-unit sub-streams from a single 64-bit seed
// so results are reproducible bit-for-bit regardless of scheduling, platform,
// or standard-library version (std::uniform_int_distribution is deliberately
// avoided: its output is not specified portably).
#pragma once

#include <cstdint>

namespace parity {

// Finalizer of the splitmix64 generator: a bijective avalanche mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Derives an independent stream seed from a root seed and a stream index.
// The index is avalanche-mixed before combining so that consecutive indices
// do not yield shifted or overlapping splitmix sequences.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    return mix64(root ^ mix64(index * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL));
}

// splitmix64: tiny, fast, and statistically solid for simulation workloads.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, bound) by rejection, bias-free. bound >= 1.
    constexpr std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

    // Uniform double in [0, 1) with 53 random bits.
    constexpr double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    constexpr bool next_bernoulli(double p) { return next_unit() < p; }

private:
    std::uint64_t state_;
};

}  // namespace parity
