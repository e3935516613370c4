#pragma once

#include <vector>

#include "dicke/disorder.hpp"
#include "dicke/ed/basis.hpp"
#include "dicke/ed/sparse.hpp"
#include "dicke/model.hpp"

namespace dicke::ed {

// omega a^dag a + D X.X + sum_i h_i S^z_i
//   + (a + a^dag) / sqrt(n_norm) sum_i c_i sigma^x_i
//   + 4 J sum_i S^x_i S^x_{i+1}   (periodic)
// X.X is the square of the truncated (a + a^dag).
// sigma^x = 2 S^x, so a flip between |n> and |n+1> has amplitude
// c sqrt(n+1) / sqrt(n_norm).
struct SpinBosonTerms {
  double omega{1.0};
  double a2_coeff{0.0};
  std::vector<double> fields;     // h_i, one per spin
  std::vector<double> couplings;  // c_i, one per spin
  double n_norm{1.0};
  double ising_j{0.0};
};

SparseHamiltonian build_spin_boson_hamiltonian(const SpinBosonTerms& terms,
                                               const BasisDescriptor& basis);

SparseHamiltonian build_dicke_hamiltonian(const DickeParams& p,
                                          const BasisDescriptor& basis);

// Clean spins occupy bits 0 .. N-1, defects the last m bits.
SparseHamiltonian build_disordered_hamiltonian(const DickeParams& p,
                                               const DisorderEnsemble& d,
                                               const BasisDescriptor& basis);

// Single k = 0 boson with an Ising ring of strength J = eta omega0.
SparseHamiltonian build_dicke_ising_hamiltonian(const DickeParams& p,
                                                double eta,
                                                const BasisDescriptor& basis);

// omega a^dag a + omega0 b^dag b + g (a + a^dag)(b + b^dag) + D X_a.X_a
SparseHamiltonian build_hopfield_hamiltonian(const DickeParams& p,
                                             const TwoBosonBasis& basis);

}  // namespace dicke::ed
