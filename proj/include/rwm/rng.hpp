#pragma once

#include <cstdint>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

// Self-contained RNG so every stochastic choice (weight init, synthetic
// data, shuffles) is pinned to this code, not to a stdlib implementation.
namespace rwm {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Unbiased integer in [0, bound) via rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = -bound % bound; // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Standard normal via Box-Muller (no state cached; one draw per call).
    double normal() {
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

// Mixes an arbitrary list of 64-bit tags into a child seed, so independent
// substreams can be derived from one master seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
    SplitMix64 mix(seed);
    std::uint64_t acc = mix.next();
    for (std::uint64_t t : tags) {
        SplitMix64 step(acc ^ (t + 0x9e3779b97f4a7c15ull));
        acc = step.next();
    }
    return acc;
}

template <typename T>
void fisher_yates_shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace rwm
