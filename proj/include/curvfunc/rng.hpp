#pragma once

#include <cstdint>
#include <random>

namespace curvfunc {

/// SplitMix64 mixing step; used to derive independent per-trial streams from
/// a single user seed so parallel execution cannot perturb results.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic counter-based stream: rng_for(seed, suite, trial) always
/// yields the same generator regardless of thread assignment.
inline std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter = 0) {
    std::uint64_t s = splitmix64(seed ^ splitmix64(stream ^ splitmix64(counter)));
    return std::mt19937_64(s);
}

}  // namespace curvfunc
