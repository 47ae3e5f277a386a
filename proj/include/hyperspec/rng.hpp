#ifndef HYPERSPEC_RNG_HPP
#define HYPERSPEC_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>

namespace hyperspec {

// Seeded RNG used everywhere randomness is needed. std::mt19937_64 output is
// fully specified by the standard; the standard distributions are not, so the
// scaling helpers live here and results are reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0, 1), 53-bit resolution
  double unit_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // uniform in [0, bound); bound = 0 or 1 returns 0
  std::uint64_t bounded(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  int bounded_int(int bound) {
    return static_cast<int>(bounded(static_cast<std::uint64_t>(bound)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperspec

#endif  // HYPERSPEC_RNG_HPP
