#include "dicke/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dicke {
namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

DickeParams validate_params(const DickeParams& p) {
  require(std::isfinite(p.omega) && p.omega > 0.0, "omega must be > 0");
  require(std::isfinite(p.omega0) && p.omega0 > 0.0, "omega0 must be > 0");
  require(std::isfinite(p.g) && p.g >= 0.0, "g must be >= 0");
  require(std::isfinite(p.a2_coeff) && p.a2_coeff >= 0.0,
          "a2_coeff must be >= 0");
  require(p.n_spins >= 1, "n_spins must be >= 1");
  return p;
}

std::string_view to_string(PhaseLabel phase) {
  switch (phase) {
    case PhaseLabel::Normal: return "normal";
    case PhaseLabel::Superradiant: return "superradiant";
    case PhaseLabel::NoTransition: return "no_transition";
  }
  return "unknown";
}

std::optional<double> critical_coupling(const DickeParams& p) {
  validate_params(p);
  const double bare = std::sqrt(p.omega * p.omega0) / 2.0;
  if (p.a2_coeff == 0.0) return bare;
  if (p.g == 0.0) return std::nullopt;
  const double kappa = p.a2_coeff * p.omega0 / (p.g * p.g);
  if (kappa >= 1.0) return std::nullopt;
  return bare / std::sqrt(1.0 - kappa);
}

PhaseLabel classify_phase(const DickeParams& p) {
  const auto gc = critical_coupling(p);
  if (!gc) return PhaseLabel::NoTransition;
  return p.g > *gc ? PhaseLabel::Superradiant : PhaseLabel::Normal;
}

LadderParams validate_ladder(const LadderParams& lp) {
  require(lp.n_sites >= 2, "n_sites must be >= 2");
  require(std::isfinite(lp.omega_r) && lp.omega_r > 0.0,
          "omega_r must be > 0");
  require(std::isfinite(lp.omega_b) && lp.omega_b > 0.0,
          "omega_b must be > 0");
  // The magnon expansion is around the ferromagnetic red-leg ground state.
  require(std::isfinite(lp.j_r) && lp.j_r >= 0.0, "j_r must be >= 0");
  require(std::isfinite(lp.j_b), "j_b must be finite");
  require(std::isfinite(lp.j_rb_x) && std::isfinite(lp.j_rb_y) &&
              std::isfinite(lp.j_rb_z),
          "inter-leg exchange must be finite");
  return lp;
}

std::string_view to_string(ScaleViolation v) {
  switch (v) {
    case ScaleViolation::RedExchangeNotDominant: return "j_r_not_dominant";
    case ScaleViolation::BlueExchangeNotSmall: return "j_b_not_small";
    case ScaleViolation::ZExchangeDropped: return "j_rb_z_dropped";
  }
  return "unknown";
}

EffectiveDickeSpec map_ladder_to_dicke(const LadderParams& lp) {
  validate_ladder(lp);
  EffectiveDickeSpec spec;
  spec.omega_spin = lp.omega_b;
  spec.n_sites = lp.n_sites;
  spec.modes.reserve(static_cast<std::size_t>(lp.n_sites));
  for (int j = 0; j < lp.n_sites; ++j) {
    const double k = 2.0 * std::numbers::pi * j / lp.n_sites;
    spec.modes.push_back({k, ladder_dispersion(lp.omega_r, lp.j_r, k),
                          lp.j_rb_x, lp.j_rb_y});
  }
  const double jb = std::abs(lp.j_b);
  if (jb > kScaleSeparationThreshold * lp.j_r) {
    spec.validity_flags.push_back(ScaleViolation::RedExchangeNotDominant);
  }
  if (jb > kScaleSeparationThreshold * lp.omega_b) {
    spec.validity_flags.push_back(ScaleViolation::BlueExchangeNotSmall);
  }
  if (lp.j_rb_z != 0.0) {
    spec.validity_flags.push_back(ScaleViolation::ZExchangeDropped);
  }
  return spec;
}

DickeParams dicke_params_for_mode(const EffectiveDickeSpec& spec,
                                  std::size_t mode_index) {
  if (mode_index >= spec.modes.size()) {
    throw std::out_of_range("mode index " + std::to_string(mode_index) +
                            " outside momentum grid");
  }
  const MomentumMode& mode = spec.modes[mode_index];
  if (mode.g_y != 0.0) {
    throw std::invalid_argument(
        "g_y coupling has no ideal Dicke counterpart; set j_rb_y = 0");
  }
  DickeParams p;
  p.omega = mode.omega_k;
  p.omega0 = spec.omega_spin;
  p.g = mode.g_x;
  p.n_spins = spec.n_sites;
  return validate_params(p);
}

}  // namespace dicke
