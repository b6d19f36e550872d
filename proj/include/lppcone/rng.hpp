#pragma once

#include <cmath>
#include <cstdint>

namespace lppcone {

// SplitMix64: a counter-based 64-bit generator. Each Monte Carlo replicate
// gets its own substream derived from (seed, replicate index), so serial and
// parallel schedules produce identical draws.
struct SplitMix64 {
    std::uint64_t state = 0;

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static SplitMix64 substream(std::uint64_t seed, std::uint64_t replicate) {
        SplitMix64 g;
        g.state = mix(seed ^ 0x632BE59BD9B4E019ULL) + replicate * 0xBF58476D1CE4E5B9ULL;
        return g;
    }
};

/// Uniform draw in [0, 1) with 53 random bits.
inline double uniform01(SplitMix64& g) {
    return static_cast<double>(g.next() >> 11) * 0x1.0p-53;
}

/// Exponential draw with the given rate (> 0).
inline double exponential(SplitMix64& g, double rate) {
    return -std::log1p(-uniform01(g)) / rate;
}

}  // namespace lppcone
