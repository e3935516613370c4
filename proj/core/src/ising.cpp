#include "dicke/ising.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dicke/bogoliubov.hpp"

namespace dicke {

Dispersion flat_dispersion(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
  return [omega](double) { return omega; };
}

Dispersion ladder_dispersion_fn(double omega_r, double j_r) {
  if (!(omega_r > 0.0)) throw std::invalid_argument("omega_r must be > 0");
  return [omega_r, j_r](double k) { return ladder_dispersion(omega_r, j_r, k); };
}

Dispersion tabulated_dispersion(const EffectiveDickeSpec& spec) {
  if (spec.modes.empty()) throw std::invalid_argument("empty dispersion table");
  auto modes = spec.modes;
  return [modes](double k) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(k, two_pi);
    if (r < 0.0) r += two_pi;
    for (const auto& m : modes) {
      double d = std::abs(r - m.k);
      d = std::min(d, two_pi - d);
      if (d < 1e-9) return m.omega_k;
    }
    throw std::out_of_range("k is not on the tabulated momentum grid");
  };
}

void validate_ising(const IsingParams& ip) {
  if (!std::isfinite(ip.eta)) throw std::invalid_argument("eta must be finite");
  if (!(ip.omega0 > 0.0)) throw std::invalid_argument("omega0 must be > 0");
  if (!(ip.g >= 0.0)) throw std::invalid_argument("g must be >= 0");
  if (ip.n_spins < 1) throw std::invalid_argument("n_spins must be >= 1");
  if (!ip.dispersion) throw std::invalid_argument("dispersion is not set");
}

bool eta_outside_small_regime(const IsingParams& ip) {
  return std::abs(ip.eta) > kEtaWarningThreshold;
}

MagnonMode magnon_spectrum(const IsingParams& ip, double k) {
  validate_ising(ip);
  const double c = std::cos(k);
  MagnonMode m;
  m.k = k;
  m.omega_k = ip.dispersion(k);
  if (!(m.omega_k > 0.0)) throw std::invalid_argument("omega_k must be > 0");
  m.e_k = ip.omega0 * (1.0 + 2.0 * ip.eta * c);
  m.alpha_k = 1.0;
  m.beta_k = ip.eta * c;
  m.g_tilde_k = ip.g * (1.0 + ip.eta * c);
  return m;
}

namespace {

void require_stable_magnon(const MagnonMode& m) {
  if (!(m.e_k > 0.0)) {
    throw std::domain_error("magnon energy is not positive at this k");
  }
}

}  // namespace

MagnonMode dicke_ising_modes(const IsingParams& ip, double k) {
  MagnonMode m = magnon_spectrum(ip, k);
  require_stable_magnon(m);
  const NormalModeData nm =
      coupled_oscillator_modes(m.omega_k, m.e_k, m.g_tilde_k);
  m.eps_minus_k = nm.eps_minus;
  m.eps_plus_k = nm.eps_plus;
  m.gamma_k = nm.gamma;
  return m;
}

CriticalCouplingK critical_coupling_k(const IsingParams& ip, double k) {
  const MagnonMode m = magnon_spectrum(ip, k);
  require_stable_magnon(m);
  CriticalCouplingK out;
  out.leading = std::sqrt(m.omega_k * ip.omega0) / 2.0;
  out.exact_quadratic =
      std::sqrt(m.omega_k * m.e_k) / (2.0 * (1.0 + ip.eta * std::cos(k)));
  return out;
}

KQuadrature squeezed_quadrature_coefficients_k(const IsingParams& ip,
                                               double k) {
  const MagnonMode m = magnon_spectrum(ip, k);
  require_stable_magnon(m);
  KQuadrature q;
  q.gamma = mixing_angle(m.omega_k, m.e_k, m.g_tilde_k);
  q.boson = std::sqrt(m.omega_k / 2.0) * std::cos(q.gamma);
  q.spin = std::sqrt(m.e_k / (2.0 * ip.n_spins)) * std::sin(q.gamma) *
           (1.0 - ip.eta * std::cos(k));
  q.phases.reserve(static_cast<std::size_t>(ip.n_spins));
  for (int n = 0; n < ip.n_spins; ++n) {
    q.phases.push_back(std::polar(1.0, n * k));
  }
  return q;
}

}  // namespace dicke
