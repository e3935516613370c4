#include "dicke/experiments/rng.hpp"

namespace dicke::experiments {

std::uint64_t CounterRng::at(std::uint64_t counter) const {
  std::uint64_t z = seed_ + (counter + 1) * kGolden;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double CounterRng::unit(std::uint64_t counter) const {
  return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(std::uint64_t counter, double lo, double hi) const {
  return lo + (hi - lo) * unit(counter);
}

}  // namespace dicke::experiments
