#pragma once

#include <cstdint>
#include <random>

namespace bda {

// Deterministic 64-bit generator. mt19937_64 output is specified by the
// standard, so identical seeds give identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [lo, hi], inclusive; lo <= hi
    std::uint64_t bounded(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        if (span == 0) return next();  // full range
        return lo + next() % span;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace bda
