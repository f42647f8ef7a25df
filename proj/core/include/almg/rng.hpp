#pragma once

#include <cstdint>

namespace almg::rng {

// SplitMix64 finalizer. Counter-based: every (seed, counter) pair maps to an
// independent 64-bit word, so sample streams can be partitioned across
// workers and replayed bit-exactly from a manifest seed.
inline constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t word(std::uint64_t seed, std::uint64_t counter) {
    return mix(seed ^ mix(counter));
}

/// Uniform double in [0, 1) from the top 53 bits.
inline constexpr double uniform01(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(word(seed, counter) >> 11) * 0x1.0p-53;
}

}  // namespace almg::rng
