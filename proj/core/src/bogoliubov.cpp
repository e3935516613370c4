#include "dicke/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dicke {

std::string_view to_string(Quadrature q) {
  switch (q) {
    case Quadrature::PMinus: return "p_minus";
    case Quadrature::Px: return "p_x";
    case Quadrature::Py: return "p_y";
    case Quadrature::Pd: return "p_d";
    case Quadrature::PMinusK: return "p_minus_k";
    case Quadrature::SyTilde: return "s_y_tilde";
    case Quadrature::PMinusTilde: return "p_minus_tilde";
  }
  return "unknown";
}

double mixing_angle(double boson_frequency, double spin_frequency,
                    double coupling) {
  const double off = 4.0 * coupling * std::sqrt(boson_frequency * spin_frequency);
  const double diff = spin_frequency * spin_frequency -
                      boson_frequency * boson_frequency;
  return 0.5 * std::atan2(off, diff);
}

NormalModeData coupled_oscillator_modes(double boson_frequency,
                                        double spin_frequency,
                                        double coupling) {
  const double wb = boson_frequency;
  const double ws = spin_frequency;
  const double root = std::sqrt(wb * ws);
  const double trace = wb * wb + ws * ws;
  const double split = std::hypot(ws * ws - wb * wb, 4.0 * coupling * root);

  // det = eps_-^2 eps_+^2, factored so that it vanishes exactly when the
  // coupling equals sqrt(wb ws) / 2 as computed by the caller.
  const double gc = root / 2.0;
  const double det = 4.0 * wb * ws * (gc - coupling) * (gc + coupling);
  if (det < 0.0) {
    throw SuperradiantInput("soft mode frequency squared is negative; "
                            "use the superradiant-phase modes");
  }

  NormalModeData modes;
  if (coupling == 0.0) {
    // decoupled: return the bare frequencies exactly
    modes.eps_minus = std::min(wb, ws);
    modes.eps_plus = std::max(wb, ws);
    modes.gamma = mixing_angle(wb, ws, 0.0);
    return modes;
  }
  const double eps_plus_sq = 0.5 * (trace + split);
  modes.eps_plus = std::sqrt(eps_plus_sq);
  modes.eps_minus = std::sqrt(det / eps_plus_sq);
  modes.gamma = mixing_angle(wb, ws, coupling);
  modes.g_renormalized = coupling;
  return modes;
}

NormalModeData normal_modes(const DickeParams& p) {
  validate_params(p);
  NormalModeData modes;
  if (p.a2_coeff == 0.0) {
    modes = coupled_oscillator_modes(p.omega, p.omega0, p.g);
  } else {
    const double stiffening = 1.0 + 4.0 * p.a2_coeff / p.omega;
    const double omega_eff = std::sqrt(p.omega * (p.omega + 4.0 * p.a2_coeff));
    const double g_eff = p.g / std::pow(stiffening, 0.25);
    modes = coupled_oscillator_modes(omega_eff, p.omega0, g_eff);
  }
  modes.g_renormalized = p.g;
  modes.phase = classify_phase(p) == PhaseLabel::NoTransition
                    ? PhaseLabel::NoTransition
                    : PhaseLabel::Normal;
  return modes;
}

NormalModeData superradiant_modes(const DickeParams& p) {
  validate_params(p);
  if (p.a2_coeff != 0.0) {
    throw std::invalid_argument(
        "superradiant modes are only available without an A^2 term");
  }
  const double gc = std::sqrt(p.omega * p.omega0) / 2.0;
  if (!(p.g > gc)) {
    throw std::invalid_argument("g must exceed the critical coupling");
  }
  const double ratio = p.g / gc;
  const double mu = ratio * ratio * ratio * ratio;
  const double w2 = p.omega * p.omega;
  const double stiff = mu * p.omega0 * p.omega0;
  const double split = std::hypot(stiff - w2, 2.0 * p.omega * p.omega0);
  const double eps_plus_sq = 0.5 * (w2 + stiff + split);
  const double det = w2 * p.omega0 * p.omega0 * (mu - 1.0);

  NormalModeData modes;
  modes.eps_plus = std::sqrt(eps_plus_sq);
  modes.eps_minus = std::sqrt(det / eps_plus_sq);
  modes.gamma = 0.5 * std::atan2(2.0 * p.omega * p.omega0, stiff - w2);
  modes.phase = PhaseLabel::Superradiant;
  modes.g_renormalized = p.g;
  return modes;
}

SqueezingReport squeezing_ratio_ground(const DickeParams& p) {
  validate_params(p);
  NormalModeData modes;
  if (classify_phase(p) == PhaseLabel::Superradiant) {
    if (p.a2_coeff != 0.0) {
      throw SuperradiantInput(
          "superradiant phase with an A^2 term is not supported");
    }
    modes = superradiant_modes(p);
  } else {
    modes = normal_modes(p);
  }
  const double ref = reference_frequency(p);
  return {modes.eps_minus / ref, ref / 2.0, Quadrature::PMinus, 0.0};
}

SingleModeVariances single_mode_variances(const DickeParams& p) {
  const NormalModeData m = normal_modes(p);
  const double c2 = std::cos(m.gamma) * std::cos(m.gamma);
  const double s2 = std::sin(m.gamma) * std::sin(m.gamma);
  return {0.5 * (m.eps_minus * c2 + m.eps_plus * s2),
          0.5 * (m.eps_minus * s2 + m.eps_plus * c2)};
}

QuadratureWeights two_mode_quadrature_coefficients(const DickeParams& p) {
  const NormalModeData m = normal_modes(p);
  return {std::sqrt(p.omega / 2.0) * std::cos(m.gamma),
          std::sqrt(p.omega0 / 2.0) * std::sin(m.gamma)};
}

double stable_coth(double x) {
  if (!(x > 0.0)) throw std::domain_error("stable_coth needs x > 0");
  const double u = std::expm1(-2.0 * x);
  return (2.0 + u) / -u;
}

SqueezingReport thermal_squeezing_ratio(const DickeParams& p,
                                        double temperature) {
  validate_params(p);
  if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
    throw std::invalid_argument("temperature must be >= 0");
  }
  if (classify_phase(p) == PhaseLabel::Superradiant) {
    throw SuperradiantInput(
        "thermal squeezing is only computed in the normal phase");
  }
  const NormalModeData m = normal_modes(p);
  const double ref = reference_frequency(p);
  SqueezingReport report{m.eps_minus / ref, ref / 2.0, Quadrature::PMinus,
                         temperature};
  if (temperature == 0.0) return report;
  if (m.eps_minus == 0.0) {
    report.xi = std::numeric_limits<double>::infinity();
    return report;
  }
  report.xi *= stable_coth(m.eps_minus / (2.0 * temperature));
  return report;
}

double classical_critical_temperature(const DickeParams& p) {
  validate_params(p);
  if (p.a2_coeff != 0.0) {
    throw std::invalid_argument(
        "classical critical temperature assumes no A^2 term");
  }
  const double arg = p.omega * p.omega0 / (4.0 * p.g * p.g);
  if (!(arg < 1.0)) {
    throw std::domain_error("no superradiant phase at T>0 for g <= g_c");
  }
  return p.omega0 / (2.0 * std::atanh(arg));
}

double spin_squeezing_parameter(double var_py, double omega0) {
  if (!(var_py >= 0.0)) throw std::invalid_argument("var_py must be >= 0");
  if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be > 0");
  return 2.0 * var_py / omega0;
}

}  // namespace dicke
