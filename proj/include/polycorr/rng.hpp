#pragma once

#include <cstdint>
#include <random>

namespace polycorr {

/// Seeded generator used by every randomized path. mt19937_64 has a
/// standardized output sequence, and the derived draws below avoid
/// std::uniform_int_distribution, so streams are identical across
/// standard libraries.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    uint64_t below(uint64_t n) {
        // rejection sampling, unbiased
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    long long range(long long lo, long long hi) {  // inclusive bounds
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool bit() { return (eng_() >> 63) != 0; }

    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace polycorr
