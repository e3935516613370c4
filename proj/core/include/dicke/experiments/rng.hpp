#pragma once

#include <cstdint>

namespace dicke::experiments {

// Counter-based SplitMix64: draw c is mix(seed + (c + 1) * golden), so the
// draws at c = 0, 1, 2, ... equal the sequential SplitMix64 stream.
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t at(std::uint64_t counter) const;
  // 53-bit uniform in [0, 1)
  double unit(std::uint64_t counter) const;
  double uniform(std::uint64_t counter, double lo, double hi) const;

  // sequential convenience
  std::uint64_t next() { return at(counter_++); }
  double next_uniform(double lo, double hi) { return uniform(counter_++, lo, hi); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_{0};
};

}  // namespace dicke::experiments
