// Deterministic pseudo-random source (splitmix64). Identical seeds give
// bit-identical streams on every platform, which the golden-file and
// determinism tests rely on.

#pragma once

#include <cstdint>

namespace qsr {

struct SplitMix64 {
    std::uint64_t state;

    explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [-1, 1)
    double symmetric() { return 2.0 * uniform() - 1.0; }
};

}  // namespace qsr
