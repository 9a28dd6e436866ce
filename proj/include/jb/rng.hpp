// Seeded RNG with a fixed bit-to-double mapping so reports replay
// byte-identically across platforms.

#pragma once

#include <cstdint>
#include <random>

namespace jb {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, 1) with 53 random bits
    double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    // inclusive bounds; modulo bias is irrelevant at these span sizes
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        return lo + eng_() % (hi - lo + 1);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace jb
