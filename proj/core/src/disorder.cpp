#include "dicke/disorder.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke {

void validate_ensemble(const DisorderEnsemble& d) {
  if (d.n_clean < 1) throw std::invalid_argument("n_clean must be >= 1");
  for (const auto& s : d.defects) {
    if (!std::isfinite(s.omega_prime) || s.omega_prime == 0.0) {
      throw std::invalid_argument("defect omega_prime must be nonzero");
    }
    if (!std::isfinite(s.g_prime) || s.g_prime < 0.0) {
      throw std::invalid_argument("defect g_prime must be >= 0");
    }
  }
}

double renormalized_coupling(double g, int n_clean, int n_defects) {
  if (n_clean < 1) throw std::invalid_argument("n_clean must be >= 1");
  if (n_defects < 0) throw std::invalid_argument("n_defects must be >= 0");
  if (n_defects == 0) return g;
  return g * std::sqrt(static_cast<double>(n_clean) / (n_clean + n_defects));
}

DickeParams renormalized_params(const DickeParams& p,
                                const DisorderEnsemble& d) {
  validate_params(p);
  validate_ensemble(d);
  if (p.n_spins != d.n_clean) {
    throw std::invalid_argument("n_spins must equal the ensemble n_clean");
  }
  DickeParams bar = p;
  bar.g = renormalized_coupling(p.g, d.n_clean, d.n_defects());
  return bar;
}

namespace {

struct CleanData {
  NormalModeData modes;
  double alpha;
};

CleanData clean_data(const DickeParams& p, const DisorderEnsemble& d) {
  const DickeParams bar = renormalized_params(p, d);
  NormalModeData modes;
  try {
    modes = normal_modes(bar);
  } catch (const SuperradiantInput&) {
    throw std::domain_error(
        "critical or superradiant; perturbation theory invalid");
  }
  if (!(modes.eps_minus > 0.0)) {
    throw std::domain_error(
        "critical or superradiant; perturbation theory invalid");
  }
  modes.g_renormalized = bar.g;
  const double alpha =
      std::sqrt(p.omega / (d.n_total() * modes.eps_minus));
  return {modes, alpha};
}

std::vector<bool> flags_for(const DisorderEnsemble& d, double alpha,
                            double cos_gamma) {
  std::vector<bool> valid;
  valid.reserve(d.defects.size());
  for (const auto& s : d.defects) {
    valid.push_back(alpha * cos_gamma * s.g_prime <=
                    kPerturbativityThreshold * std::abs(s.omega_prime));
  }
  return valid;
}

}  // namespace

PerturbativeReport disorder_xi_perturbative(const DickeParams& p,
                                            const DisorderEnsemble& d) {
  const CleanData c = clean_data(p, d);
  const double ref = reference_frequency(p);
  const double eps = c.modes.eps_minus;
  const double total = d.n_total();
  const double m = d.n_defects();
  const double sin_g = std::sin(c.modes.gamma);
  const double cos_g = std::cos(c.modes.gamma);

  PerturbativeReport r;
  r.modes = c.modes;
  r.alpha = c.alpha;
  r.term_clean = eps / ref;
  if (m > 0) {
    r.term_pinned = sin_g * sin_g * (p.omega0 / ref) * m / total;
    double sum = 0.0;
    for (const auto& s : d.defects) {
      // product-state defect points against its field
      const double sz = s.omega_prime > 0.0 ? -0.5 : 0.5;
      sum += 2.0 * sz * s.g_prime / (eps + std::abs(s.omega_prime));
    }
    r.term_coupling = -(c.alpha * cos_g / ref) *
                      std::sqrt(eps * p.omega0 / total) * sum;
  }
  r.xi = r.term_clean + r.term_pinned + r.term_coupling;
  r.valid = flags_for(d, c.alpha, cos_g);
  return r;
}

std::vector<bool> perturbativity_check(const DickeParams& p,
                                       const DisorderEnsemble& d) {
  const CleanData c = clean_data(p, d);
  return flags_for(d, c.alpha, std::cos(c.modes.gamma));
}

}  // namespace dicke
