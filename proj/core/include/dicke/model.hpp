#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace dicke {

// Energies are absolute (hbar = k_B = 1).
struct DickeParams {
  double omega{1.0};     // boson frequency
  double omega0{1.0};    // spin splitting
  double g{0.0};         // collective coupling
  int n_spins{1};
  double a2_coeff{0.0};  // D in D (a + a^dagger)^2
};

// Returns p unchanged or throws std::invalid_argument naming the bad field.
DickeParams validate_params(const DickeParams& p);

enum class PhaseLabel { Normal, Superradiant, NoTransition };

std::string_view to_string(PhaseLabel phase);

// Critical coupling of the normal/superradiant transition.
//
// With an A^2 term the coefficient is taken to scale with the coupling the
// way the sum rule ties them (D proportional to g^2), i.e. the ratio
// kappa = D omega0 / g^2 is held fixed while g is scanned. The transition
// then sits at sqrt(omega omega0) / (2 sqrt(1 - kappa)); for kappa >= 1
// there is none and std::nullopt is returned.
std::optional<double> critical_coupling(const DickeParams& p);

PhaseLabel classify_phase(const DickeParams& p);

// Smaller bare frequency; its uncoupled momentum variance (half of it) is
// the squeezing reference.
inline double reference_frequency(const DickeParams& p) {
  return p.omega < p.omega0 ? p.omega : p.omega0;
}

struct LadderParams {
  double j_r{0.0};     // red (fast) leg exchange
  double j_b{0.0};     // blue (slow) leg exchange
  double j_rb_x{0.0};  // inter-leg exchange components
  double j_rb_y{0.0};
  double j_rb_z{0.0};
  double omega_r{1.0};
  double omega_b{1.0};
  int n_sites{2};
};

LadderParams validate_ladder(const LadderParams& lp);

// "a << b" counts as violated once a exceeds this fraction of b.
inline constexpr double kScaleSeparationThreshold = 0.1;

enum class ScaleViolation {
  RedExchangeNotDominant,  // J_r >> J_b fails
  BlueExchangeNotSmall,    // J_b << omega_b fails
  ZExchangeDropped,        // j_rb_z != 0 is not represented in the mapping
};

std::string_view to_string(ScaleViolation v);

struct MomentumMode {
  double k{0.0};
  double omega_k{0.0};
  double g_x{0.0};
  double g_y{0.0};
};

struct EffectiveDickeSpec {
  std::vector<MomentumMode> modes;  // k = 2 pi j / N, j = 0 .. N-1
  double omega_spin{0.0};           // blue-spin splitting
  int n_sites{0};
  std::vector<ScaleViolation> validity_flags;
};

// Linear spin-wave mapping of the two-leg ladder onto a multimode Dicke
// model. The 1/sqrt(N) collective normalization is left to the Hamiltonian
// builders.
EffectiveDickeSpec map_ladder_to_dicke(const LadderParams& lp);

inline double ladder_dispersion(double omega_r, double j_r, double k) {
  return omega_r + j_r * (1.0 - std::cos(k));
}

// Single-mode Dicke parameters for one momentum mode. Only the x coupling
// has an ideal-Dicke counterpart, so a nonzero g_y is rejected.
DickeParams dicke_params_for_mode(const EffectiveDickeSpec& spec,
                                  std::size_t mode_index);

}  // namespace dicke
