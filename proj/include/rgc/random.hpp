#pragma once

#include <cstdint>
#include <random>

namespace rgc {

/// Seedable source of uniform bits; identical seed gives an identical
/// sequence (mt19937_64 engine, hand-rolled conversions).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for (seed, stream index), for batch reproducibility.
    static RandomSource derived(std::uint64_t seed, std::uint64_t stream) {
        return RandomSource(splitmix64(seed ^ splitmix64(stream + UINT64_C(0x9e3779b97f4a7c15))));
    }

    std::uint64_t next_u64() { return engine_(); }

    bool next_bit() { return next_u64() >> 63; }

    /// Uniform in [0, 1) with 53 bits of precision.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    /// Uniform in [0, bound), bound > 0; rejection sampling, unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += UINT64_C(0x9e3779b97f4a7c15);
        x = (x ^ (x >> 30)) * UINT64_C(0xbf58476d1ce4e5b9);
        x = (x ^ (x >> 27)) * UINT64_C(0x94d049bb133111eb);
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace rgc
