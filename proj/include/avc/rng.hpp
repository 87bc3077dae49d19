#pragma once

#include <cstdint>

namespace avc {

// splitmix64, used everywhere randomness is needed so runs are reproducible
// from a single seed across platforms (std::mt19937 would also work, but the
// distributions in <random> are not bit-stable between standard libraries).
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0, by rejection to avoid modulo bias
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

}  // namespace avc
