#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "dicke/model.hpp"

namespace dicke {

using Dispersion = std::function<double(double)>;

Dispersion flat_dispersion(double omega);
Dispersion ladder_dispersion_fn(double omega_r, double j_r);
// Lookup on the momentum grid of a mapped ladder; k is reduced mod 2 pi and
// must hit a grid point to 1e-9.
Dispersion tabulated_dispersion(const EffectiveDickeSpec& spec);

struct IsingParams {
  double eta{0.0};  // J / omega0, signed
  double omega0{1.0};
  Dispersion dispersion;
  double g{0.0};
  int n_spins{2};
};

inline constexpr double kEtaWarningThreshold = 0.3;

void validate_ising(const IsingParams& ip);
// Linear spin-wave results are only trusted for small |eta|.
bool eta_outside_small_regime(const IsingParams& ip);

struct MagnonMode {
  double k{0.0};
  double omega_k{0.0};
  double e_k{0.0};
  double alpha_k{1.0};
  double beta_k{0.0};
  double g_tilde_k{0.0};
  double eps_minus_k{0.0};
  double eps_plus_k{0.0};
  double gamma_k{0.0};
};

// E_k, alpha_k, beta_k (plus omega_k and g~_k) only.
MagnonMode magnon_spectrum(const IsingParams& ip, double k);

// Full per-k normal modes; throws SuperradiantInput when the k mode is soft.
MagnonMode dicke_ising_modes(const IsingParams& ip, double k);

struct CriticalCouplingK {
  double exact_quadratic{0.0};
  double leading{0.0};
};

CriticalCouplingK critical_coupling_k(const IsingParams& ip, double k);

struct KQuadrature {
  double boson{0.0};
  double spin{0.0};  // per-site weight, already divided by sqrt(N)
  double gamma{0.0};
  std::vector<std::complex<double>> phases;  // e^{i n k}, n = 0 .. N-1
};

// Coefficients of the momentum-k two-mode quadrature. The mixing angle is
// evaluated from its closed form even where the quadratic model is already
// unstable, so finite-size sweeps can keep using the same operator.
KQuadrature squeezed_quadrature_coefficients_k(const IsingParams& ip,
                                               double k);

}  // namespace dicke
