#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

namespace dicke::ed {

inline constexpr int kMaxSpins = 24;

// Boson (0..n_max) x spin-1/2^N product basis. Flat index n * 2^N + mask,
// bit i of mask set = spin i up.
struct BasisDescriptor {
  int n_spins{1};
  int n_max{1};
  std::size_t spin_dim{2};
  std::size_t dim{4};

  std::size_t index(int n, std::uint32_t mask) const {
    return static_cast<std::size_t>(n) * spin_dim + mask;
  }
  std::pair<int, std::uint32_t> state(std::size_t idx) const {
    return {static_cast<int>(idx / spin_dim),
            static_cast<std::uint32_t>(idx % spin_dim)};
  }
};

BasisDescriptor build_basis(int n_spins, int n_max);

// Two truncated bosons, flat index na * (n_max_b + 1) + nb.
struct TwoBosonBasis {
  int n_max_a{1};
  int n_max_b{1};
  std::size_t dim{4};

  std::size_t index(int na, int nb) const {
    return static_cast<std::size_t>(na) * (n_max_b + 1) + nb;
  }
  std::pair<int, int> state(std::size_t idx) const {
    return {static_cast<int>(idx / (n_max_b + 1)),
            static_cast<int>(idx % (n_max_b + 1))};
  }
};

TwoBosonBasis build_two_boson_basis(int n_max_a, int n_max_b);

}  // namespace dicke::ed
