// dicke-squeeze: figure reproductions and parameter sweeps to CSV.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dicke/experiments/config.hpp"
#include "dicke/experiments/csv.hpp"
#include "dicke/experiments/runner.hpp"

namespace dx = dicke::experiments;

int main(int argc, char** argv) {
  CLI::App app{"Squeezing in the Dicke model: figure data and sweeps"};
  app.name("dicke-squeeze");

  std::string experiment, config_path, out_path;
  std::vector<int> n_max;
  bool strict = false, emit_plot = false, timings = false;
  int jobs = 1;

  app.add_option("experiment", experiment, "fig2 .. fig7 or sweep")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "sweep"}));
  app.add_option("--config", config_path, "JSON configuration file")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "CSV output (default: config 'output' or stdout)");
  app.add_option("--n-max", n_max, "boson truncations, e.g. 40,50")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict", strict,
               "exit 2 on any tolerance or invariant failure; forces one worker");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--emit-plot-script", emit_plot, "write <out>.gp for gnuplot");
  app.add_flag("--timings", timings, "append a wall_time column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  dx::SweepResult result;
  std::string target;
  try {
    const dx::SweepConfig cfg =
        dx::load_config(config_path, dx::parse_experiment(experiment));
    dx::RunOptions opts;
    opts.jobs = jobs;
    opts.strict = strict;
    opts.n_max_override = n_max;
    if (!n_max.empty() && cfg.convergence_report && n_max.size() < 2 &&
        (cfg.experiment == dx::Experiment::Fig3 ||
         cfg.experiment == dx::Experiment::Fig6 ||
         cfg.experiment == dx::Experiment::Fig7)) {
      throw dx::ConfigError("a convergence report needs at least 2 n_max values");
    }
    target = out_path.empty() ? cfg.output : out_path;
    if (emit_plot && target.empty()) {
      throw dx::ConfigError("--emit-plot-script needs an output file");
    }
    result = dx::run_experiment(cfg, opts);
  } catch (const dx::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return 1;
  }

  dx::CsvOptions csv;
  csv.timings = timings;
  try {
    if (target.empty()) {
      dx::write_csv(std::cout, result, csv);
    } else {
      dx::write_csv_file(target, result, csv);
      if (emit_plot) {
        std::ofstream gp(target + ".gp");
        gp << dx::plot_script(result, target);
        if (!gp) throw std::runtime_error("cannot write plot script");
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return 1;
  }

  for (const auto& f : result.failures) std::cerr << "failure: " << f << '\n';
  if (strict && !result.failures.empty()) return 2;
  return 0;
}
