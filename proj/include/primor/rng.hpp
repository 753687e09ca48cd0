#pragma once

#include <cstdint>

namespace primor {

// Deterministic 64-bit generator (splitmix64). Hand-rolled so that the bit
// stream is identical for identical seeds on every platform, independent of
// standard-library distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bound > 0. Modulo reduction: the bias is below
    // bound / 2^64, immaterial at the bounds used here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform in [lo, hi], inclusive.
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

private:
    std::uint64_t state_;
};

}  // namespace primor
