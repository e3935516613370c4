#include "dicke/ed/basis.hpp"

#include <stdexcept>

namespace dicke::ed {

BasisDescriptor build_basis(int n_spins, int n_max) {
  if (n_spins < 1 || n_spins > kMaxSpins) {
    throw std::invalid_argument("n_spins must be in [1, 24]");
  }
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  BasisDescriptor b;
  b.n_spins = n_spins;
  b.n_max = n_max;
  b.spin_dim = std::size_t{1} << n_spins;
  b.dim = static_cast<std::size_t>(n_max + 1) * b.spin_dim;
  return b;
}

TwoBosonBasis build_two_boson_basis(int n_max_a, int n_max_b) {
  if (n_max_a < 0 || n_max_b < 0) {
    throw std::invalid_argument("n_max must be >= 0");
  }
  TwoBosonBasis b;
  b.n_max_a = n_max_a;
  b.n_max_b = n_max_b;
  b.dim = static_cast<std::size_t>(n_max_a + 1) * (n_max_b + 1);
  return b;
}

}  // namespace dicke::ed
