#include "dicke/experiments/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "dicke/bogoliubov.hpp"
#include "dicke/ed/basis.hpp"
#include "dicke/ed/hamiltonian.hpp"
#include "dicke/ed/observables.hpp"
#include "dicke/ising.hpp"

#ifndef DICKE_VERSION_STRING
#define DICKE_VERSION_STRING "0.0.0"
#endif

namespace dicke::experiments {

// ---- kernels ---------------------------------------------------------------

namespace {

EdValue from_state(const ed::GroundStateResult& gs, double value) {
  return {value, gs.relative_residual(), gs.iterations, gs.near_degenerate};
}

}  // namespace

FiniteSizeVariances finite_size_variances(const DickeParams& p, int n_max,
                                          const ed::SolverOptions& opts) {
  const auto basis = ed::build_basis(p.n_spins, n_max);
  const auto h = ed::build_dicke_hamiltonian(p, basis);
  const auto gs = ed::ground_state(h, opts);
  return {from_state(gs, ed::variance(gs, ed::p_minus_tilde(basis))),
          from_state(gs, ed::variance(gs, ed::sy_tilde(basis)))};
}

EdValue disorder_xi_ed(const DickeParams& p, const DisorderEnsemble& d,
                       int n_max, const ed::SolverOptions& opts) {
  const auto basis = ed::build_basis(d.n_total(), n_max);
  const auto h = ed::build_disordered_hamiltonian(p, d, basis);
  const auto gs = ed::ground_state(h, opts);
  const double var = ed::variance(gs, ed::disorder_quadrature(p, d, basis));
  return from_state(gs, var / (reference_frequency(p) / 2.0));
}

EdValue ising_xi_ed(const DickeParams& p, double eta, int n_max,
                    const ed::SolverOptions& opts) {
  IsingParams ip;
  ip.eta = eta;
  ip.omega0 = p.omega0;
  ip.dispersion = flat_dispersion(p.omega);
  ip.g = p.g;
  ip.n_spins = p.n_spins;
  const double e0 = magnon_spectrum(ip, 0.0).e_k;
  const auto basis = ed::build_basis(p.n_spins, n_max);
  const auto h = ed::build_dicke_ising_hamiltonian(p, eta, basis);
  const auto gs = ed::ground_state(h, opts);
  const double var = ed::variance(gs, ed::ising_k0_quadrature(ip, basis));
  return from_state(gs, var / (std::min(p.omega, e0) / 2.0));
}

double hopfield_thermal_xi(const DickeParams& p, double temperature,
                           int n_max) {
  const auto basis = ed::build_two_boson_basis(n_max, n_max);
  const auto h = ed::build_hopfield_hamiltonian(p, basis);
  const auto q = ed::hopfield_p_minus(p, basis);
  const double var = ed::thermal_variance(h, q, temperature);
  return var / (reference_frequency(p) / 2.0);
}

double thermal_argmin_omega0(const DickeParams& base, double temperature,
                             const std::vector<double>& omega0_grid) {
  double best = std::numeric_limits<double>::infinity();
  double arg = std::numeric_limits<double>::quiet_NaN();
  for (double w0 : omega0_grid) {
    DickeParams p = base;
    p.omega0 = w0;
    if (classify_phase(p) == PhaseLabel::Superradiant) continue;
    const double xi = thermal_squeezing_ratio(p, temperature).xi;
    if (std::isfinite(xi) && xi < best) {
      best = xi;
      arg = w0;
    }
  }
  return arg;
}

// ---- execution -------------------------------------------------------------

namespace {

constexpr double kTruncationTolerance = 1e-3;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Task {
  std::vector<double> coords;
  std::string label;
  std::function<std::vector<Row>()> fn;
};

struct Outcome {
  std::vector<Row> rows;
  std::string error;
};

Outcome run_task(const Task& t) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    o.rows = t.fn();
  } catch (const std::exception& e) {
    Row r;
    r.coords = t.coords;
    r.quantity = t.label;
    r.value = kNaN;
    r.method = "error";
    r.flag = "fail:error";
    o.rows = {r};
    o.error = e.what();
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  for (auto& r : o.rows) r.wall_time = dt;
  return o;
}

std::vector<Outcome> execute(const std::vector<Task>& tasks, int jobs) {
  std::vector<Outcome> out(tasks.size());
  const int k = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (k == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = run_task(tasks[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < k; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        out[i] = run_task(tasks[i]);
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

SweepResult start_result(const SweepConfig& cfg,
                         std::vector<std::string> coord_names) {
  SweepResult r;
  r.meta.version = DICKE_VERSION_STRING;
  r.meta.experiment = std::string(to_string(cfg.experiment));
  r.meta.config_hash = hex64(fnv1a64(cfg.canonical));
  r.meta.seed = cfg.rng_seed;
  r.meta.timestamp = utc_timestamp();
  if (!cfg.notes.empty()) r.meta.notes.push_back(cfg.notes);
  r.coord_names = std::move(coord_names);
  return r;
}

std::string describe(const SweepResult& r, const Row& row) {
  std::ostringstream s;
  s << row.quantity;
  if (row.n_max > 0) s << " n_max=" << row.n_max;
  for (std::size_t i = 0; i < row.coords.size() && i < r.coord_names.size(); ++i) {
    s << ' ' << r.coord_names[i] << '=' << format_double(row.coords[i]);
  }
  s << ": " << row.flag;
  return s.str();
}

void collect(SweepResult& r, std::vector<Outcome>&& outcomes) {
  for (auto& o : outcomes) {
    for (auto& row : o.rows) {
      if (row.failed()) {
        std::string msg = describe(r, row);
        if (!o.error.empty()) msg += " (" + o.error + ")";
        r.failures.push_back(std::move(msg));
      }
      r.rows.push_back(std::move(row));
    }
  }
}

// Convergence rows: for every (coords, quantity) ED group with at least two
// truncations, |value(largest n_max) - value(next largest)|.
void add_convergence_rows(SweepResult& r) {
  struct Group {
    std::vector<double> coords;
    std::string quantity;
    std::map<int, double> by_n;
  };
  std::vector<Group> groups;
  for (const Row& row : r.rows) {
    if (row.method != "ed") continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return g.quantity == row.quantity && g.coords == row.coords;
    });
    if (it == groups.end()) {
      groups.push_back({row.coords, row.quantity, {}});
      it = groups.end() - 1;
    }
    it->by_n[row.n_max] = row.value;
  }
  for (const Group& g : groups) {
    if (g.by_n.size() < 2) continue;
    auto hi = g.by_n.rbegin();
    auto lo = std::next(hi);
    Row c;
    c.coords = g.coords;
    c.quantity = "delta_" + g.quantity;
    c.value = std::abs(hi->second - lo->second);
    c.method = "convergence";
    c.n_max = hi->first;
    c.flag = c.value < kTruncationTolerance ? "ok" : "fail:truncation";
    if (std::isnan(c.value)) c.flag = "fail:truncation";
    if (c.failed()) r.failures.push_back(describe(r, c));
    r.rows.push_back(std::move(c));
  }
}

std::vector<int> n_max_list(const SweepConfig& cfg, const RunOptions& opts) {
  return opts.n_max_override.empty() ? cfg.ed.n_max : opts.n_max_override;
}

int worker_count(const RunOptions& opts) {
  return opts.strict ? 1 : std::max(1, opts.jobs);
}

ed::SolverOptions solver_options(const SweepConfig& cfg) {
  ed::SolverOptions so;
  so.tolerance = cfg.ed.tolerance;
  so.method = cfg.ed.method;
  return so;
}

Row ed_row(std::vector<double> coords, std::string quantity, const EdValue& v,
           int n_max, double tol) {
  Row r;
  r.coords = std::move(coords);
  r.quantity = std::move(quantity);
  r.value = v.value;
  r.method = "ed";
  r.n_max = n_max;
  r.residual = v.residual;
  if (!(v.residual <= tol)) {
    r.flag = "fail:residual";
  } else if (v.near_degenerate) {
    r.flag = "near_degenerate";
  }
  return r;
}

Row analytic_row(std::vector<double> coords, std::string quantity,
                 double value, std::string flag = "ok") {
  Row r;
  r.coords = std::move(coords);
  r.quantity = std::move(quantity);
  r.value = value;
  r.flag = std::move(flag);
  return r;
}

const std::vector<double>& axis_values(const SweepConfig& cfg,
                                       std::string_view name) {
  const Axis* a = cfg.axis(name);
  if (!a) throw ConfigError("experiment needs grid axis '" + std::string(name) + "'");
  return a->values;
}

DickeParams resonant(const SweepConfig& cfg) {
  DickeParams p = cfg.model;
  p.omega0 = p.omega;
  p.a2_coeff = 0.0;
  return p;
}

// Thermal ratio row with the superradiant and divergent cases labelled.
Row thermal_row(std::vector<double> coords, const DickeParams& p, double T,
                bool mask) {
  if (classify_phase(p) == PhaseLabel::Superradiant) {
    if (mask) return analytic_row(std::move(coords), "xi_thermal", 0.0, "masked_superradiant");
    return analytic_row(std::move(coords), "xi_thermal", kNaN, "fail:superradiant_input");
  }
  const double xi = thermal_squeezing_ratio(p, T).xi;
  return analytic_row(std::move(coords), "xi_thermal", xi,
                      std::isinf(xi) ? "divergent" : "ok");
}

SweepResult finish(SweepResult r, std::vector<Outcome>&& outcomes,
                   bool convergence) {
  collect(r, std::move(outcomes));
  if (convergence) add_convergence_rows(r);
  return r;
}

}  // namespace

// ---- figures ---------------------------------------------------------------

SweepResult run_fig2(const SweepConfig& cfg, const RunOptions& opts) {
  SweepResult r = start_result(cfg, {"g"});
  const DickeParams base = resonant(cfg);
  std::vector<Task> tasks;
  for (double g : axis_values(cfg, "g")) {
    tasks.push_back({{g}, "xi", [base, g] {
      DickeParams p = base;
      p.g = g;
      const PhaseLabel phase = classify_phase(p);
      std::vector<Row> rows;
      rows.push_back(analytic_row({g}, "xi_d0", squeezing_ratio_ground(p).xi,
                                  std::string(to_string(phase))));
      DickeParams a2 = p;
      a2.a2_coeff = g * g / p.omega0;
      rows.push_back(analytic_row({g}, "xi_a2", squeezing_ratio_ground(a2).xi,
                                  std::string(to_string(classify_phase(a2)))));
      return rows;
    }});
  }
  return finish(std::move(r), execute(tasks, worker_count(opts)), false);
}

SweepResult run_fig3(const SweepConfig& cfg, const RunOptions& opts) {
  SweepResult r = start_result(cfg, {"n_spins"});
  r.meta.notes.push_back(
      "large-N limits: var_p_minus_tilde -> 0, var_sy_tilde -> " +
      format_double(1.0 / std::numbers::sqrt2));
  const DickeParams base = resonant(cfg);
  const auto so = solver_options(cfg);
  const double tol = cfg.ed.tolerance;
  std::vector<Task> tasks;
  for (double nd : axis_values(cfg, "n_spins")) {
    const int n = static_cast<int>(nd);
    for (int nmax : n_max_list(cfg, opts)) {
      tasks.push_back({{nd}, "var_p_minus_tilde", [=] {
        DickeParams p = base;
        p.n_spins = n;
        const auto v = finite_size_variances(p, nmax, so);
        return std::vector<Row>{
            ed_row({nd}, "var_p_minus_tilde", v.var_p_minus_tilde, nmax, tol),
            ed_row({nd}, "var_sy_tilde", v.var_sy_tilde, nmax, tol)};
      }});
    }
  }
  return finish(std::move(r), execute(tasks, worker_count(opts)),
                cfg.convergence_report);
}

SweepResult run_fig4(const SweepConfig& cfg, const RunOptions& opts) {
  SweepResult r = start_result(cfg, {"omega0", "gc_minus_g", "T"});
  std::vector<Task> tasks;
  for (double w0 : axis_values(cfg, "omega0")) {
    for (double x : axis_values(cfg, "gc_minus_g")) {
      tasks.push_back({{w0, x, kNaN}, "xi_thermal", [&cfg, w0, x] {
        DickeParams p = cfg.model;
        p.omega0 = w0;
        p.a2_coeff = 0.0;
        p.g = std::sqrt(p.omega * w0) / 2.0 - x;
        std::vector<Row> rows;
        for (double T : axis_values(cfg, "T")) {
          if (p.g < 0.0) {
            rows.push_back(analytic_row({w0, x, T}, "xi_thermal", kNaN, "outside_domain"));
          } else {
            rows.push_back(thermal_row({w0, x, T}, p, T, cfg.mask_superradiant));
          }
        }
        return rows;
      }});
    }
  }
  return finish(std::move(r), execute(tasks, worker_count(opts)), false);
}

SweepResult run_fig5(const SweepConfig& cfg, const RunOptions& opts) {
  SweepResult r = start_result(cfg, {"T", "omega0"});
  DickeParams base = cfg.model;
  base.a2_coeff = 0.0;
  const auto& w0s = axis_values(cfg, "omega0");
  std::vector<Task> tasks;
  for (double T : axis_values(cfg, "T")) {
    tasks.push_back({{T, kNaN}, "xi_thermal", [&cfg, base, &w0s, T] {
      std::vector<Row> rows;
      for (double w0 : w0s) {
        DickeParams p = base;
        p.omega0 = w0;
        rows.push_back(thermal_row({T, w0}, p, T, cfg.mask_superradiant));
      }
      const double arg = thermal_argmin_omega0(base, T, w0s);
      rows.push_back(analytic_row({T, arg}, "argmin_omega0", arg));
      return rows;
    }});
  }
  return finish(std::move(r), execute(tasks, worker_count(opts)), false);
}

SweepResult run_fig6(const SweepConfig& cfg, const RunOptions& opts) {
  SweepResult r = start_result(cfg, {"n_clean", "fraction"});
  const DickeParams base = resonant(cfg);
  const auto so = solver_options(cfg);
  const double tol = cfg.ed.tolerance;
  std::vector<Task> tasks;
  for (double nd : axis_values(cfg, "n_spins")) {
    const int n = static_cast<int>(nd);
    const DisorderEnsemble d = resolve_ensemble(cfg, n);
    const double frac = static_cast<double>(d.n_defects()) / d.n_total();
    DickeParams p = base;
    p.n_spins = n;
    for (int nmax : n_max_list(cfg, opts)) {
      tasks.push_back({{nd, frac}, "xi_pd", [=] {
        return std::vector<Row>{
            ed_row({nd, frac}, "xi_pd", disorder_xi_ed(p, d, nmax, so), nmax, tol)};
      }});
    }
    tasks.push_back({{nd, frac}, "xi_perturbative", [=] {
      const PerturbativeReport rep = disorder_xi_perturbative(p, d);
      const bool ok = std::all_of(rep.valid.begin(), rep.valid.end(),
                                  [](bool b) { return b; });
      return std::vector<Row>{analytic_row({nd, frac}, "xi_perturbative", rep.xi,
                                           ok ? "ok" : "non_perturbative")};
    }});
  }
  return finish(std::move(r), execute(tasks, worker_count(opts)),
                cfg.convergence_report);
}

SweepResult run_fig7(const SweepConfig& cfg, const RunOptions& opts) {
  SweepResult r = start_result(cfg, {"eta"});
  const DickeParams base = resonant(cfg);
  const auto so = solver_options(cfg);
  const double tol = cfg.ed.tolerance;
  std::vector<Task> tasks;
  for (double eta : axis_values(cfg, "eta")) {
    for (int nmax : n_max_list(cfg, opts)) {
      tasks.push_back({{eta}, "xi_p_minus_k0", [=] {
        Row row = ed_row({eta}, "xi_p_minus_k0", ising_xi_ed(base, eta, nmax, so),
                         nmax, tol);
        if (row.flag == "ok" && std::abs(eta) > kEtaWarningThreshold) {
          row.flag = "large_eta";
        }
        return std::vector<Row>{row};
      }});
    }
  }
  return finish(std::move(r), execute(tasks, worker_count(opts)),
                cfg.convergence_report);
}

// ---- generic sweep ---------------------------------------------------------

namespace {

struct Point {
  DickeParams p;
  double T{0.0};
  double eta{0.0};
  double k{0.0};
};

Point make_point(const SweepConfig& cfg, const std::vector<Axis>& axes,
                 const std::vector<double>& coords) {
  Point pt;
  pt.p = cfg.model;
  std::optional<double> gap;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const std::string& a = axes[i].name;
    const double v = coords[i];
    if (a == "omega") pt.p.omega = v;
    else if (a == "omega0") pt.p.omega0 = v;
    else if (a == "g") pt.p.g = v;
    else if (a == "n_spins") pt.p.n_spins = static_cast<int>(v);
    else if (a == "a2_coeff") pt.p.a2_coeff = v;
    else if (a == "T") pt.T = v;
    else if (a == "eta") pt.eta = v;
    else if (a == "k") pt.k = v;
    else if (a == "gc_minus_g") gap = v;
  }
  if (gap) pt.p.g = std::sqrt(pt.p.omega * pt.p.omega0) / 2.0 - *gap;
  validate_params(pt.p);
  return pt;
}

IsingParams ising_at(const SweepConfig& cfg, const Point& pt) {
  IsingParams ip;
  ip.eta = pt.eta;
  ip.omega0 = pt.p.omega0;
  ip.dispersion = cfg.ladder ? ladder_dispersion_fn(cfg.ladder->omega_r, cfg.ladder->j_r)
                             : flat_dispersion(pt.p.omega);
  ip.g = pt.p.g;
  ip.n_spins = pt.p.n_spins;
  return ip;
}

bool is_ed_quantity(const std::string& q) { return q.rfind("ed_", 0) == 0; }

const std::vector<std::string> kAnalyticQuantities = {
    "xi_ground",       "xi_thermal",      "eps_minus",        "eps_plus",
    "gamma",           "critical_coupling", "tc_classical",   "var_px",
    "var_py",          "xi_disorder_perturbative", "magnon_e_k", "eps_minus_k",
    "gc_k_exact",      "gc_k_leading",    "ladder_omega_k"};
const std::vector<std::string> kEdQuantities = {
    "ed_var_p_minus_tilde", "ed_var_sy_tilde", "ed_xi_pd",
    "ed_xi_ising_k0",       "ed_hopfield_var_p_minus",
    "ed_hopfield_thermal_xi", "ed_ground_energy", "ed_total_spin"};

Row analytic_quantity(const SweepConfig& cfg, const std::string& q,
                      const Point& pt, const std::vector<double>& coords) {
  const DickeParams& p = pt.p;
  if (q == "xi_ground") return analytic_row(coords, q, squeezing_ratio_ground(p).xi);
  if (q == "xi_thermal") {
    Row r = thermal_row(coords, p, pt.T, cfg.mask_superradiant);
    return r;
  }
  if (q == "eps_minus" || q == "eps_plus" || q == "gamma") {
    const NormalModeData m = classify_phase(p) == PhaseLabel::Superradiant
                                 ? superradiant_modes(p)
                                 : normal_modes(p);
    const double v = q == "eps_minus" ? m.eps_minus
                     : q == "eps_plus" ? m.eps_plus
                                       : m.gamma;
    return analytic_row(coords, q, v, std::string(to_string(m.phase)));
  }
  if (q == "critical_coupling") {
    const auto gc = critical_coupling(p);
    return gc ? analytic_row(coords, q, *gc)
              : analytic_row(coords, q, kNaN, "no_transition");
  }
  if (q == "tc_classical") {
    if (classify_phase(p) != PhaseLabel::Superradiant) {
      return analytic_row(coords, q, 0.0, "no_superradiant_phase");
    }
    return analytic_row(coords, q, classical_critical_temperature(p));
  }
  if (q == "var_px" || q == "var_py") {
    const auto v = single_mode_variances(p);
    return analytic_row(coords, q, q == "var_px" ? v.var_px : v.var_py);
  }
  if (q == "xi_disorder_perturbative") {
    const auto rep = disorder_xi_perturbative(p, resolve_ensemble(cfg, p.n_spins));
    const bool ok = std::all_of(rep.valid.begin(), rep.valid.end(), [](bool b) { return b; });
    return analytic_row(coords, q, rep.xi, ok ? "ok" : "non_perturbative");
  }
  const IsingParams ip = ising_at(cfg, pt);
  const std::string eta_flag = eta_outside_small_regime(ip) ? "large_eta" : "ok";
  if (q == "magnon_e_k") return analytic_row(coords, q, magnon_spectrum(ip, pt.k).e_k, eta_flag);
  if (q == "eps_minus_k") {
    return analytic_row(coords, q, dicke_ising_modes(ip, pt.k).eps_minus_k, eta_flag);
  }
  if (q == "gc_k_exact") {
    return analytic_row(coords, q, critical_coupling_k(ip, pt.k).exact_quadratic, eta_flag);
  }
  if (q == "gc_k_leading") {
    return analytic_row(coords, q, critical_coupling_k(ip, pt.k).leading, eta_flag);
  }
  if (q == "ladder_omega_k") {
    if (!cfg.ladder) throw ConfigError("ladder_omega_k needs a 'ladder' block");
    const EffectiveDickeSpec spec = map_ladder_to_dicke(*cfg.ladder);
    std::string flag = "ok";
    if (!spec.validity_flags.empty()) {
      flag.clear();
      for (auto v : spec.validity_flags) {
        if (!flag.empty()) flag += ';';
        flag += std::string(to_string(v));
      }
    }
    return analytic_row(coords, q,
                        ladder_dispersion(cfg.ladder->omega_r, cfg.ladder->j_r, pt.k),
                        flag);
  }
  throw ConfigError("unknown quantity '" + q + "'");
}

std::vector<Row> ed_quantities(const SweepConfig& cfg,
                               const std::vector<std::string>& qs,
                               const Point& pt, const std::vector<double>& coords,
                               int nmax) {
  const auto so = solver_options(cfg);
  const double tol = cfg.ed.tolerance;
  const DickeParams& p = pt.p;
  std::vector<Row> rows;
  std::optional<ed::GroundStateResult> dicke_gs;
  std::optional<ed::BasisDescriptor> dicke_basis;
  auto ensure_dicke = [&] {
    if (dicke_gs) return;
    dicke_basis = ed::build_basis(p.n_spins, nmax);
    dicke_gs = ed::ground_state(ed::build_dicke_hamiltonian(p, *dicke_basis), so);
  };
  for (const auto& q : qs) {
    if (q == "ed_var_p_minus_tilde" || q == "ed_var_sy_tilde" ||
        q == "ed_ground_energy" || q == "ed_total_spin") {
      ensure_dicke();
      double v = 0.0;
      if (q == "ed_var_p_minus_tilde") v = ed::variance(*dicke_gs, ed::p_minus_tilde(*dicke_basis));
      else if (q == "ed_var_sy_tilde") v = ed::variance(*dicke_gs, ed::sy_tilde(*dicke_basis));
      else if (q == "ed_ground_energy") v = dicke_gs->energy;
      else v = ed::total_spin_expectation(dicke_gs->vector, *dicke_basis);
      rows.push_back(ed_row(coords, q, from_state(*dicke_gs, v), nmax, tol));
    } else if (q == "ed_xi_pd") {
      rows.push_back(ed_row(coords, q,
                            disorder_xi_ed(p, resolve_ensemble(cfg, p.n_spins), nmax, so),
                            nmax, tol));
    } else if (q == "ed_xi_ising_k0") {
      rows.push_back(ed_row(coords, q, ising_xi_ed(p, pt.eta, nmax, so), nmax, tol));
    } else if (q == "ed_hopfield_var_p_minus") {
      const auto basis = ed::build_two_boson_basis(nmax, nmax);
      const auto gs = ed::ground_state(ed::build_hopfield_hamiltonian(p, basis), so);
      rows.push_back(ed_row(coords, q,
                            from_state(gs, ed::variance(gs, ed::hopfield_p_minus(p, basis))),
                            nmax, tol));
    } else if (q == "ed_hopfield_thermal_xi") {
      Row r = analytic_row(coords, q, hopfield_thermal_xi(p, pt.T, nmax));
      r.method = "ed";
      r.n_max = nmax;
      r.residual = 0.0;
      rows.push_back(std::move(r));
    } else {
      throw ConfigError("unknown quantity '" + q + "'");
    }
  }
  return rows;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg, const RunOptions& opts) {
  for (const auto& q : cfg.quantities) {
    const bool known =
        std::find(kAnalyticQuantities.begin(), kAnalyticQuantities.end(), q) !=
            kAnalyticQuantities.end() ||
        std::find(kEdQuantities.begin(), kEdQuantities.end(), q) != kEdQuantities.end();
    if (!known) throw ConfigError("unknown quantity '" + q + "'");
  }
  std::vector<Axis> axes = cfg.grids;
  const bool wants_ladder =
      std::find(cfg.quantities.begin(), cfg.quantities.end(), "ladder_omega_k") !=
      cfg.quantities.end();
  if (wants_ladder && !cfg.axis("k")) {
    if (!cfg.ladder) throw ConfigError("ladder_omega_k needs a 'ladder' block");
    Axis k{"k", {}};
    for (const auto& m : map_ladder_to_dicke(*cfg.ladder).modes) k.values.push_back(m.k);
    axes.push_back(std::move(k));
  }
  std::vector<std::string> names;
  for (const auto& a : axes) names.push_back(a.name);
  SweepResult r = start_result(cfg, names);

  std::vector<std::string> analytic, edq;
  for (const auto& q : cfg.quantities) (is_ed_quantity(q) ? edq : analytic).push_back(q);
  const auto nmaxes = n_max_list(cfg, opts);

  std::vector<Task> tasks;
  std::vector<std::size_t> idx(axes.size(), 0);
  bool done = false;
  while (!done) {
    std::vector<double> coords;
    for (std::size_t i = 0; i < axes.size(); ++i) coords.push_back(axes[i].values[idx[i]]);
    for (const auto& q : analytic) {
      tasks.push_back({coords, q, [&cfg, &axes, coords, q] {
        return std::vector<Row>{analytic_quantity(cfg, q, make_point(cfg, axes, coords), coords)};
      }});
    }
    for (int nmax : nmaxes) {
      if (edq.empty()) break;
      tasks.push_back({coords, edq.front(), [&cfg, &axes, &edq, coords, nmax] {
        return ed_quantities(cfg, edq, make_point(cfg, axes, coords), coords, nmax);
      }});
    }
    // odometer, last axis fastest
    done = true;
    for (std::size_t i = axes.size(); i-- > 0;) {
      if (++idx[i] < axes[i].values.size()) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
  }
  return finish(std::move(r), execute(tasks, worker_count(opts)),
                cfg.convergence_report && !edq.empty());
}

SweepResult run_experiment(const SweepConfig& cfg, const RunOptions& opts) {
  switch (cfg.experiment) {
    case Experiment::Fig2: return run_fig2(cfg, opts);
    case Experiment::Fig3: return run_fig3(cfg, opts);
    case Experiment::Fig4: return run_fig4(cfg, opts);
    case Experiment::Fig5: return run_fig5(cfg, opts);
    case Experiment::Fig6: return run_fig6(cfg, opts);
    case Experiment::Fig7: return run_fig7(cfg, opts);
    case Experiment::Sweep: return run_sweep(cfg, opts);
  }
  throw ConfigError("unknown experiment");
}

std::string plot_script(const SweepResult& r, const std::string& csv_path) {
  const std::size_t nc = r.coord_names.size();
  const std::size_t qcol = nc + 1, vcol = nc + 2, ncol = nc + 4;
  std::vector<std::pair<std::string, int>> series;
  for (const Row& row : r.rows) {
    if (row.method == "convergence") continue;
    std::pair<std::string, int> key{row.quantity, row.n_max};
    if (std::find(series.begin(), series.end(), key) == series.end()) series.push_back(key);
  }
  std::ostringstream s;
  s << "# " << r.meta.experiment << " generated by dicke-squeeze\n"
    << "set datafile separator ','\n"
    << "set datafile commentschars '#'\n"
    << "set key outside\n"
    << "set xlabel '" << (nc ? r.coord_names[0] : "x") << "'\n"
    << "set ylabel 'value'\n";
  if (nc >= 2 && (r.meta.experiment == "fig4" || r.meta.experiment == "fig5")) {
    s << "set view map\nset contour base\nset cntrparam levels auto 10\n"
      << "set xlabel '" << r.coord_names[nc - 1] << "'\n"
      << "set ylabel '" << r.coord_names[nc - 2] << "'\n"
      << "splot '" << csv_path << "' every ::1 using " << nc << ':' << nc - 1
      << ":(strcol(" << qcol << ") eq 'xi_thermal' ? $" << vcol
      << " : NaN) with lines notitle\n";
    return s.str();
  }
  s << "plot \\\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& [q, n] = series[i];
    s << "  '" << csv_path << "' every ::1 using 1:((strcol(" << qcol << ") eq '" << q
      << "'";
    if (n > 0) s << " && $" << ncol << " == " << n;
    s << ") ? $" << vcol << " : NaN) with linespoints title '" << q;
    if (n > 0) s << " n_max=" << n;
    s << "'" << (i + 1 < series.size() ? ", \\\n" : "\n");
  }
  return s.str();
}

}  // namespace dicke::experiments
