#pragma once

#include <stdexcept>
#include <vector>

#include "dicke/bogoliubov.hpp"
#include "dicke/disorder.hpp"
#include "dicke/ed/basis.hpp"
#include "dicke/ed/solver.hpp"
#include "dicke/ed/sparse.hpp"
#include "dicke/ising.hpp"

namespace dicke::ed {

// Observable O = i M with M real antisymmetric.
struct QuadratureOperator {
  CsrMatrix generator;
  Quadrature label{Quadrature::PMinus};
};

// M = w_b (a^dag - a) - w_s sum_i (S+_i - S-_i)
QuadratureOperator general_quadrature(const BasisDescriptor& basis,
                                      double boson_weight, double spin_weight,
                                      Quadrature label);

// (a^dag - a) / sqrt(2) - sum (S+ - S-) / sqrt(2N)
QuadratureOperator p_minus_tilde(const BasisDescriptor& basis);

// sum (S+ - S-) / sqrt(N)
QuadratureOperator sy_tilde(const BasisDescriptor& basis);

// Two-mode quadrature over all N + m spins with the mixing angle of the
// clean model at the renormalized coupling.
QuadratureOperator disorder_quadrature(const DickeParams& p,
                                       const DisorderEnsemble& d,
                                       const BasisDescriptor& basis);

// k = 0 magnon/boson quadrature of the Dicke-Ising model.
QuadratureOperator ising_k0_quadrature(const IsingParams& ip,
                                       const BasisDescriptor& basis);

// Hopfield quadratures: p_- = cos(g) p_a - sin(g) p_b (antisymmetric
// generator) and q_- = cos(g) x_a - sin(g) x_b (real symmetric).
QuadratureOperator hopfield_p_minus(const DickeParams& p,
                                    const TwoBosonBasis& basis);
CsrMatrix hopfield_q_minus(const DickeParams& p, const TwoBosonBasis& basis);

// (a + a^dag) and sum_i S^x_i, both real symmetric.
CsrMatrix boson_position(const BasisDescriptor& basis);
CsrMatrix total_sx(const BasisDescriptor& basis);

// <O^2> - <O>^2 for O = i M and a real state: ||M v||^2.
double variance(const std::vector<double>& v, const QuadratureOperator& q);
double variance(const GroundStateResult& gs, const QuadratureOperator& q);
// For a real symmetric observable S.
double variance_symmetric(const std::vector<double>& v, const CsrMatrix& s);
double expectation(const std::vector<double>& v, const CsrMatrix& s);

// <S^2> of a state over the spin-1/2^N product basis.
double total_spin_expectation(const std::vector<double>& v,
                              const BasisDescriptor& basis);

inline constexpr double kBoltzmannTailBound = 1e-10;

class TailBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gibbs variance of O = i M using the lowest n_eigenpairs of the full
// spectrum (0 = all). The weight exp(-(E_cut - E_0)/T) of the highest
// retained level must stay below kBoltzmannTailBound.
double thermal_variance(const SparseHamiltonian& h,
                        const QuadratureOperator& q, double temperature,
                        std::size_t n_eigenpairs = 0);
double thermal_variance(const DenseSpectrum& spec,
                        const QuadratureOperator& q, double temperature,
                        std::size_t n_eigenpairs = 0);

}  // namespace dicke::ed
