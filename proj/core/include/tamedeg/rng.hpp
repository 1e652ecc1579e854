// Deterministic pseudo-random streams for the search harness.
//
// The generator is SplitMix64 (Steele, Lea & Vigna, "Fast splittable
// pseudorandom number generators"): the state advances by the 64-bit golden
// ratio constant and each output is the state scrambled by two
// xor-shift-multiply rounds. Output is byte-identical across platforms.
// Independent streams are derived by scrambling a (seed, index, attempt)
// tuple into a fresh initial state, so per-sample work is reproducible in
// isolation.

#pragma once

#include <cstdint>

namespace tamedeg {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); bound must be positive. Plain modulo
    /// reduction: the tiny bias is irrelevant here, determinism is not.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Inclusive range.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// Initial state for the sub-stream identified by (seed, a, b).
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    SplitMix64 mixer(seed);
    std::uint64_t s = mixer.next();
    s ^= a + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
    SplitMix64 mixer2(s);
    s = mixer2.next();
    s ^= b + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
    SplitMix64 mixer3(s);
    return mixer3.next();
}

}  // namespace tamedeg
