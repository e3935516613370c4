#pragma once

#include <string>
#include <vector>

#include "dicke/disorder.hpp"
#include "dicke/ed/solver.hpp"
#include "dicke/experiments/config.hpp"
#include "dicke/experiments/csv.hpp"
#include "dicke/model.hpp"

namespace dicke::experiments {

struct RunOptions {
  int jobs{1};
  bool strict{false};  // forces jobs = 1
  std::vector<int> n_max_override;  // replaces cfg.ed.n_max when non-empty
};

SweepResult run_fig2(const SweepConfig& cfg, const RunOptions& opts = {});
SweepResult run_fig3(const SweepConfig& cfg, const RunOptions& opts = {});
SweepResult run_fig4(const SweepConfig& cfg, const RunOptions& opts = {});
SweepResult run_fig5(const SweepConfig& cfg, const RunOptions& opts = {});
SweepResult run_fig6(const SweepConfig& cfg, const RunOptions& opts = {});
SweepResult run_fig7(const SweepConfig& cfg, const RunOptions& opts = {});
SweepResult run_sweep(const SweepConfig& cfg, const RunOptions& opts = {});
SweepResult run_experiment(const SweepConfig& cfg, const RunOptions& opts = {});

// gnuplot script reading the CSV at csv_path
std::string plot_script(const SweepResult& r, const std::string& csv_path);

// Finite-size kernels shared by the runners and the test suites.

struct EdValue {
  double value{0.0};
  double residual{0.0};  // relative to ||H||_inf
  int iterations{0};
  bool near_degenerate{false};
};

struct FiniteSizeVariances {
  EdValue var_p_minus_tilde;
  EdValue var_sy_tilde;
};

// Ideal Dicke ground state: Var of (a^dag - a)/sqrt2 - ... and of S~_y.
FiniteSizeVariances finite_size_variances(const DickeParams& p, int n_max,
                                          const ed::SolverOptions& opts = {});

// Var(p_d) / (min(omega, omega0) / 2) for the disordered model.
EdValue disorder_xi_ed(const DickeParams& p, const DisorderEnsemble& d,
                       int n_max, const ed::SolverOptions& opts = {});

// Var(p_{-,k=0}) / (min(omega, E_0) / 2) for the Dicke-Ising model.
EdValue ising_xi_ed(const DickeParams& p, double eta, int n_max,
                    const ed::SolverOptions& opts = {});

// 2 Var(p_-) / min(omega, omega0) of the Gibbs state of the truncated
// two-boson model (n_max per mode).
double hopfield_thermal_xi(const DickeParams& p, double temperature,
                           int n_max);

// Argmin over omega0 of the analytic thermal ratio at fixed (omega, g, T);
// points at or beyond criticality are skipped.
double thermal_argmin_omega0(const DickeParams& base, double temperature,
                             const std::vector<double>& omega0_grid);

}  // namespace dicke::experiments
