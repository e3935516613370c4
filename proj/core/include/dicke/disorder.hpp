#pragma once

#include <vector>

#include "dicke/bogoliubov.hpp"
#include "dicke/model.hpp"

namespace dicke {

struct DefectSpin {
  double omega_prime{1.0};  // signed splitting, must be nonzero
  double g_prime{0.0};      // coupling, >= 0
};

struct DisorderEnsemble {
  int n_clean{1};
  std::vector<DefectSpin> defects;

  int n_defects() const { return static_cast<int>(defects.size()); }
  int n_total() const { return n_clean + n_defects(); }
};

void validate_ensemble(const DisorderEnsemble& d);

// g sqrt(N / (N + m))
double renormalized_coupling(double g, int n_clean, int n_defects);

inline constexpr double kPerturbativityThreshold = 0.1;

struct PerturbativeReport {
  double xi{0.0};
  double alpha{0.0};
  double term_clean{0.0};
  double term_pinned{0.0};
  double term_coupling{0.0};
  std::vector<bool> valid;  // one per defect
  NormalModeData modes;     // clean modes at the renormalized coupling
};

// First-order squeezing ratio of the two-mode quadrature in the presence of
// m weakly coupled defect spins. Requires p.n_spins == d.n_clean and a
// positive soft mode at the renormalized coupling.
PerturbativeReport disorder_xi_perturbative(const DickeParams& p,
                                            const DisorderEnsemble& d);

// true = defect i is inside the perturbative regime
std::vector<bool> perturbativity_check(const DickeParams& p,
                                       const DisorderEnsemble& d);

// Clean-model parameters with g replaced by the renormalized coupling.
DickeParams renormalized_params(const DickeParams& p,
                                const DisorderEnsemble& d);

}  // namespace dicke
