#pragma once

#include <cstdint>
#include <random>

namespace densdet {

// Seeded RNG helpers on top of std::mt19937_64. The mappings to doubles and
// integer ranges are implemented here instead of <random> distributions so
// that identical seeds produce identical streams on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1) with 53 random mantissa bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform with unit variance, used to seed grad-check inputs.
  double unit_var() { return uniform(-kSqrt3, kSqrt3); }

  // Inclusive integer range.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % span);
  }

 private:
  static constexpr double kSqrt3 = 1.7320508075688772;
  std::mt19937_64 gen_;
};

}  // namespace densdet
