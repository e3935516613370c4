#pragma once

#include <stdexcept>
#include <string_view>

#include "dicke/model.hpp"

namespace dicke {

// Thrown when a normal-phase formula is asked for a point where the soft
// mode frequency squared is negative.
class SuperradiantInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct NormalModeData {
  double eps_minus{0.0};
  double eps_plus{0.0};
  double gamma{0.0};  // mixing angle in [0, pi/2]
  PhaseLabel phase{PhaseLabel::Normal};
  double g_renormalized{0.0};
};

enum class Quadrature {
  PMinus,       // two-mode normal-mode momentum
  Px,           // boson momentum
  Py,           // Holstein-Primakoff spin momentum
  Pd,           // two-mode quadrature including defect spins
  PMinusK,      // momentum-k magnon/boson quadrature
  SyTilde,      // i (S+ - S-) / sqrt(N)
  PMinusTilde,  // finite-size two-mode quadrature at resonance
};

std::string_view to_string(Quadrature q);

struct SqueezingReport {
  double xi{1.0};
  double reference_variance{0.0};
  Quadrature quadrature{Quadrature::PMinus};
  double temperature{0.0};
};

// Normal modes of two coupled oscillators
//   1/2 (p_x^2 + wb^2 x^2 + p_y^2 + ws^2 y^2 + 4 c sqrt(wb ws) x y),
// with the "-" mode continuously connected to the lower bare oscillator.
// Throws SuperradiantInput when c exceeds sqrt(wb ws) / 2.
NormalModeData coupled_oscillator_modes(double boson_frequency,
                                        double spin_frequency,
                                        double coupling);

// gamma = atan2(4 c sqrt(wb ws), ws^2 - wb^2) / 2, defined for any c >= 0.
double mixing_angle(double boson_frequency, double spin_frequency,
                    double coupling);

// Normal-phase (or no-transition) modes; the A^2 term enters through
// omega~ = sqrt(omega (omega + 4D)) and g~ = g / (1 + 4D/omega)^(1/4).
NormalModeData normal_modes(const DickeParams& p);

// Modes around the displaced superradiant ground state (D = 0, g > g_c).
NormalModeData superradiant_modes(const DickeParams& p);

// Ground-state ratio Var(p_-) / (min(omega, omega0) / 2).
SqueezingReport squeezing_ratio_ground(const DickeParams& p);

struct SingleModeVariances {
  double var_px{0.0};
  double var_py{0.0};
};

SingleModeVariances single_mode_variances(const DickeParams& p);

struct QuadratureWeights {
  double boson{0.0};  // multiplies i (a^dagger - a)
  double spin{0.0};   // multiplies -i (b^dagger - b)
};

QuadratureWeights two_mode_quadrature_coefficients(const DickeParams& p);

// (eps_- / min(omega, omega0)) coth(eps_- / 2T). Returns +infinity for a
// vanishing soft mode at T > 0.
SqueezingReport thermal_squeezing_ratio(const DickeParams& p,
                                        double temperature);

double classical_critical_temperature(const DickeParams& p);

// Kitagawa-Ueda parameter expressed through the Holstein-Primakoff momentum.
double spin_squeezing_parameter(double var_py, double omega0);

// coth(x) for x > 0 without cancellation at small x.
double stable_coth(double x);

}  // namespace dicke
