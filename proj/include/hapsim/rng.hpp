#pragma once

#include <cstdint>
#include <random>

namespace hapsim {

// Seeded generator with portable derived draws. The engine is the standard
// mt19937_64 (bit-exact by specification); index and double mappings are
// implemented here because the standard distributions are not reproducible
// across library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform index in [0, n), n > 0. Multiply-shift mapping; the modulo bias
  // of 2^-64 * n is irrelevant at the sizes used here.
  std::size_t next_index(std::size_t n) {
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(n);
    return static_cast<std::size_t>(wide >> 64);
  }

  // Uniform in [lo, hi).
  double next_range(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hapsim
