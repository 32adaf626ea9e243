#pragma once

#include <cstdint>

namespace lbp {

// SplitMix64. Trials are seeded per index (seed, stream) so sampled scans
// produce identical draws no matter how the trial loop is partitioned.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}
    Rng(std::uint64_t seed, std::uint64_t stream)
        : state(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0; rejection keeps it exactly uniform.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    std::uint32_t bits(int nbits) {
        return static_cast<std::uint32_t>(next() & ((std::uint64_t{1} << nbits) - 1));
    }

    bool flip() { return next() & 1; }
};

}  // namespace lbp
