#pragma once

#include <cstdint>

namespace choose72 {

// splitmix64: tiny deterministic generator, stable across platforms.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0; rejection keeps it unbiased
    uint64_t below(uint64_t bound) {
        uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    return rng.next();
}

}  // namespace choose72
