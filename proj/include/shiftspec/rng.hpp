#pragma once

#include <cstdint>

namespace shiftspec {

// splitmix64: the fixed, portable generator behind every seeded corpus.
// Identical seeds give identical streams on every platform, which keeps
// suite outputs byte-for-byte reproducible.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-enough value in [0, n); the modulo bias is irrelevant for
    // corpus sampling.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    bool flip() { return (next() & 1) != 0; }
};

} // namespace shiftspec
