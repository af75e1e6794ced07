#pragma once

#include <cstdint>
#include <random>

namespace osn {

// Seeded RNG with hand-rolled integer/real transforms. mt19937_64 output is
// pinned by the standard, but uniform_int_distribution is not, so the
// transforms live here to keep runs byte-reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform integer in [0, n) via masked rejection. n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(n - 1);
    for (;;) {
      std::uint64_t x = eng_() & mask;
      if (x < n) return x;
    }
  }

  // Uniform real in [0, 1) with 53 random bits.
  double real() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return real() < p; }

  // Standard normal via Box-Muller; one value per call, no cached spare.
  double normal() {
    double u1 = real();
    while (u1 <= 0.0) u1 = real();
    double u2 = real();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace osn
