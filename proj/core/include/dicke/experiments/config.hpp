#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dicke/disorder.hpp"
#include "dicke/ed/solver.hpp"
#include "dicke/model.hpp"

namespace dicke::experiments {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Experiment { Fig2, Fig3, Fig4, Fig5, Fig6, Fig7, Sweep };

std::string_view to_string(Experiment e);
Experiment parse_experiment(std::string_view name);

struct EdSettings {
  std::vector<int> n_max{40, 50};
  double tolerance{1e-10};
  ed::SolverMethod method{ed::SolverMethod::Auto};
};

// Uniform (omega', g') ranges drawn from the counter-based generator.
struct RandomDisorder {
  int count{1};
  double omega_min{1.0}, omega_max{1.0};
  double g_min{0.0}, g_max{0.0};
};

struct Axis {
  std::string name;
  std::vector<double> values;
};

struct SweepConfig {
  Experiment experiment{Experiment::Sweep};
  DickeParams model;
  std::vector<Axis> grids;  // cartesian product, last axis fastest
  EdSettings ed;
  std::uint64_t rng_seed{0};
  std::string output;
  std::vector<DefectSpin> defects;
  std::optional<RandomDisorder> random_disorder;
  std::vector<std::string> quantities;  // sweep only
  bool mask_superradiant{false};
  std::optional<LadderParams> ladder;
  bool convergence_report{true};
  std::string notes;
  std::string canonical;  // normalized JSON text the hash is taken over

  const Axis* axis(std::string_view name) const;
};

// Defaults for each figure; JSON keys override them.
SweepConfig default_config(Experiment e);

SweepConfig parse_config(std::string_view json_text,
                         std::optional<Experiment> experiment = std::nullopt);
SweepConfig load_config(const std::string& path,
                        std::optional<Experiment> experiment = std::nullopt);

void validate_config(const SweepConfig& cfg);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t x);

// Explicit defects, or the random ensemble drawn from rng_seed.
DisorderEnsemble resolve_ensemble(const SweepConfig& cfg, int n_clean);

std::vector<double> linspace(double lo, double hi, int count);

}  // namespace dicke::experiments
