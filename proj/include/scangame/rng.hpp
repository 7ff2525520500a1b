#pragma once
// Deterministic counter-based random numbers (splitmix64 finalizer over a
// keyed counter).  Stateless draws keyed by (seed, counter) make results
// independent of how work is partitioned across threads.

#include <cstdint>

namespace scangame {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// The n-th value of the stream keyed by `seed`.
inline std::uint64_t rng_at(std::uint64_t seed, std::uint64_t n) {
    return mix64(seed + (n + 1) * 0x9e3779b97f4a7c15ULL);
}

// Unbiased-enough index in [0, n) via the multiply-shift reduction.
inline std::uint32_t rng_index(std::uint64_t value, std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(value) * n) >> 64);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double rng_unit(std::uint64_t value) {
    return static_cast<double>(value >> 11) * 0x1.0p-53;
}

// Convenience stream with its own counter, for test batteries.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t counter = 0;

    explicit RngStream(std::uint64_t s, std::uint64_t start = 0)
        : seed(s), counter(start) {}

    std::uint64_t next_u64() { return rng_at(seed, counter++); }
    double next_unit() { return rng_unit(next_u64()); }
    // Uniform in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }
};

} // namespace scangame
