#pragma once

// Deterministic randomness helpers. Seeds are derived with splitmix64 and
// sampling avoids std::uniform_int_distribution, so a fixed seed produces
// the same stream on every platform and standard library.

#include <cstdint>
#include <random>

namespace softset {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Mixes a master seed with up to two stream indices (law, trial, element,
/// ...), giving independent reproducible sub-streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t state = master;
    splitmix64_next(state);
    state ^= a * 0x9e3779b97f4a7c15ULL;
    splitmix64_next(state);
    state ^= b * 0xc2b2ae3d27d4eb4fULL;
    return splitmix64_next(state);
}

/// Uniform draw from [0, n) by rejection; n = 0 yields 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

/// Uniform draw from the closed interval [lo, hi].
inline std::int64_t uniform_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                     uniform_below(rng, span));
}

inline bool chance(std::mt19937_64& rng, std::uint64_t numerator, std::uint64_t denominator) {
    return uniform_below(rng, denominator) < numerator;
}

}  // namespace softset
