#pragma once

#include <cstdint>

namespace qdmet {

// SplitMix64 (Steele, Lea, Flood 2014): a counter-based generator whose i-th
// output is a fixed avalanche mix of seed + i*gamma. Every randomized stage of
// the pipeline derives an independent stream from a seed and a set of indices,
// so runs are reproducible bit-for-bit across platforms and thread counts.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n) by rejection; exact for any n >= 1.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

  private:
    std::uint64_t state_;
};

// Stream derivation: hash the key indices into the seed so that (seed, a, b, c)
// identifies one independent generator.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                   std::uint64_t c = 0) {
    SplitMix64 g(seed ^ (a * 0xd6e8feb86659fd93ULL) ^ (b * 0xa5a3564e2f5b34cfULL) ^
                 (c * 0x9e3779b97f4a7c15ULL));
    g.next();
    return g.next();
}

}  // namespace qdmet
