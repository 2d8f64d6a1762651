#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <cstdint>

namespace spra {

// Counter-based splittable PRNG built on the SplitMix64 update.
//
// A (seed, stream) pair fully determines the draw sequence, so every Monte
// Carlo trial can own stream id = trial index and produce the same numbers
// no matter how trials are scheduled across worker threads.
class SeededRng {
public:
    SeededRng(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(mix(seed) ^ mix(stream ^ 0x6a09e667f3bcc909ull))) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform on (0, 1]; never returns 0, so log() is always safe.
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform on {0, ..., bound-1} without modulo bias.
    std::uint64_t next_below(std::uint64_t bound) {
        assert(bound > 0);
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Standard normal via the Box-Muller transform (pairs are cached).
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(next_unit()));
        const double phi = k_two_pi * next_unit();
        spare_ = r * std::sin(phi);
        has_spare_ = true;
        return r * std::cos(phi);
    }

    // Circularly symmetric complex Gaussian with unit total variance:
    // real and imaginary parts are independent N(0, 1/2).
    std::complex<double> next_cgaussian() {
        const double amp = std::sqrt(-std::log(next_unit()));
        const double phi = k_two_pi * next_unit();
        return {amp * std::cos(phi), amp * std::sin(phi)};
    }

private:
    static constexpr double k_two_pi = 6.283185307179586476925286766559;

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace spra
