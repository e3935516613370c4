// Acceptance checks 1..10. One line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dicke/bogoliubov.hpp"
#include "dicke/disorder.hpp"
#include "dicke/ed/basis.hpp"
#include "dicke/ed/hamiltonian.hpp"
#include "dicke/ed/observables.hpp"
#include "dicke/ed/solver.hpp"
#include "dicke/experiments/config.hpp"
#include "dicke/experiments/csv.hpp"
#include "dicke/experiments/rng.hpp"
#include "dicke/experiments/runner.hpp"
#include "dicke/ising.hpp"

using namespace dicke;
namespace dx = dicke::experiments;

namespace {

struct Outcome {
  bool pass{true};
  std::string detail;
};

// collects failure reasons; detail keeps the headline numbers
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (fails_.size() < 6) fails_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome done() const {
    std::string d = notes_;
    for (const auto& f : fails_) d += (d.empty() ? "" : "; ") + std::string("FAILED ") + f;
    return {pass_, d};
  }

 private:
  bool pass_{true};
  std::vector<std::string> fails_;
  std::string notes_;
};

std::string fmt(double x, int prec = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", prec, x);
  return buf;
}

DickeParams resonance(double g, int n = 1) { return {1.0, 1.0, g, n, 0.0}; }

Outcome criterion1() {
  Check c;
  double worst_crit = 0.0;
  for (double w : {0.3, 1.0, 2.5})
    for (double w0 : {0.2, 1.0, 4.0}) {
      const double gc = std::sqrt(w * w0) / 2;
      const double xi = squeezing_ratio_ground({w, w0, gc, 1, 0.0}).xi;
      worst_crit = std::max(worst_crit, std::abs(xi));
    }
  c.require(worst_crit < 1e-12, "|xi(g_c)| = " + fmt(worst_crit));
  double worst = 0.0;
  const int n = 5000;
  for (int i = 0; i < n; ++i) {
    const double g = 0.5 * i / n;
    const double xi = squeezing_ratio_ground(resonance(g)).xi;
    worst = std::max(worst, std::abs(xi - std::sqrt(1 - 2 * g)));
  }
  c.require(worst < 1e-12, "closed-form deviation " + fmt(worst));
  c.note("max |xi(g_c)| = " + fmt(worst_crit) + ", max |xi - sqrt(1-2g)| = " + fmt(worst));
  return c.done();
}

Outcome criterion2() {
  Check c;
  const int n = 10000;
  double min_eps = INFINITY, prev = INFINITY;
  bool decreasing = true;
  for (int i = 0; i < n; ++i) {
    const double g = 5.0 * i / (n - 1);
    const auto m = normal_modes({1.0, 1.0, g, 1, g * g});
    min_eps = std::min(min_eps, m.eps_minus);
    const double xi = squeezing_ratio_ground({1.0, 1.0, g, 1, g * g}).xi;
    if (i > 0 && !(xi < prev)) decreasing = false;
    prev = xi;
  }
  const double half = squeezing_ratio_ground({1.0, 1.0, 0.5, 1, 0.25}).xi;
  c.require(min_eps > 0.0, "min eps_- = " + fmt(min_eps));
  c.require(decreasing, "xi not strictly decreasing");
  c.require(std::abs(half - 0.6180340) <= 1e-6, "xi(0.5) = " + fmt(half, 10));
  c.note("min eps_- = " + fmt(min_eps) + ", xi(0.5) = " + fmt(half, 10));
  return c.done();
}

Outcome criterion3() {
  // draws fixed in advance: seed 3, omega = 1, omega0 in [0.5, 2],
  // g / g_c in [0, 1), T in [0, 0.5]; draws with eps_- < 0.1 are rejected
  Check c;
  const dx::CounterRng rng(3);
  std::uint64_t counter = 0;
  int accepted = 0;
  double worst = 0.0;
  std::string worst_at;
  while (accepted < 20) {
    DickeParams p{1.0, rng.uniform(counter, 0.5, 2.0), 0.0, 1, 0.0};
    p.g = std::sqrt(p.omega0) / 2 * rng.unit(counter + 1);
    const double T = rng.uniform(counter + 2, 0.0, 0.5);
    counter += 3;
    if (normal_modes(p).eps_minus < 0.1) continue;
    ++accepted;
    const double analytic = thermal_squeezing_ratio(p, T).xi;
    const double oracle = dx::hopfield_thermal_xi(p, T, 40);
    const double err = std::abs(analytic - oracle);
    if (err > worst) {
      worst = err;
      worst_at = "omega0=" + fmt(p.omega0) + " g=" + fmt(p.g) + " T=" + fmt(T);
    }
    c.require(err < 1e-3, "set " + std::to_string(accepted) + " err " + fmt(err) +
                              " (omega0=" + fmt(p.omega0) + " g=" + fmt(p.g) + " T=" + fmt(T) + ")");
  }
  c.note("20 sets, max |analytic - Gibbs| = " + fmt(worst) + " at " + worst_at);
  return c.done();
}

Outcome criterion4() {
  Check c;
  double lowest = INFINITY;
  const int n = 2000;
  for (int i = 0; i < n; ++i) {
    const double g = 0.5 * i / n;
    lowest = std::min(lowest, thermal_squeezing_ratio(resonance(g), 0.55).xi);
  }
  c.require(lowest > 1.0, "min xi = " + fmt(lowest));
  c.note("min over g of xi(T=0.55) = " + fmt(lowest, 8));
  return c.done();
}

Outcome criterion5() {
  Check c;
  const auto grid = dx::linspace(0.04, 0.2, 16001);
  const DickeParams base{1.0, 1.0, 0.1, 1, 0.0};
  std::vector<double> args;
  for (double T : {0.015, 0.017, 0.019}) {
    const double a = dx::thermal_argmin_omega0(base, T, grid);
    args.push_back(a);
    c.require(a > 0.04, "argmin at T=" + fmt(T) + " is " + fmt(a));
  }
  c.require(args[0] < args[1] && args[1] < args[2], "argmin not decreasing as T decreases");
  c.note("argmin omega0 = " + fmt(args[0]) + ", " + fmt(args[1]) + ", " + fmt(args[2]));
  return c.done();
}

Outcome criterion6() {
  Check c;
  std::vector<double> p40, p50;
  double worst_delta = 0.0;
  for (int n = 2; n <= 7; ++n) {
    const auto a = dx::finite_size_variances(resonance(0.5, n), 40);
    const auto b = dx::finite_size_variances(resonance(0.5, n), 50);
    for (const auto* v : {&a, &b}) {
      c.require(v->var_p_minus_tilde.value < 1.0, "Var(p~-) >= 1 at N=" + std::to_string(n));
      c.require(v->var_sy_tilde.value < 1.0, "Var(S~y) >= 1 at N=" + std::to_string(n));
      c.require(v->var_p_minus_tilde.residual <= 1e-10, "residual at N=" + std::to_string(n));
    }
    const double d = std::max(std::abs(a.var_p_minus_tilde.value - b.var_p_minus_tilde.value),
                              std::abs(a.var_sy_tilde.value - b.var_sy_tilde.value));
    worst_delta = std::max(worst_delta, d);
    c.require(d < 1e-3, "truncation delta " + fmt(d) + " at N=" + std::to_string(n));
    p40.push_back(a.var_p_minus_tilde.value);
    p50.push_back(b.var_p_minus_tilde.value);
  }
  for (std::size_t i = 1; i < p50.size(); ++i) {
    c.require(p50[i] < p50[i - 1] && p40[i] < p40[i - 1],
              "Var(p~-) not decreasing at N=" + std::to_string(i + 2));
  }
  c.note("Var(p~-) N=2..7: " + fmt(p50.front()) + " .. " + fmt(p50.back()) +
         ", max truncation delta " + fmt(worst_delta));
  return c.done();
}

Outcome criterion7() {
  Check c;
  const auto basis = ed::build_two_boson_basis(80, 80);
  double worst = 0.0;
  for (double g : {0.1, 0.3, 0.45}) {
    const DickeParams p = resonance(g);
    const auto gs = ed::ground_state(ed::build_hopfield_hamiltonian(p, basis));
    const double var = ed::variance(gs, ed::hopfield_p_minus(p, basis));
    const double err = std::abs(var - normal_modes(p).eps_minus / 2);
    worst = std::max(worst, err);
    c.require(err < 1e-5, "g=" + fmt(g) + " err " + fmt(err));
  }
  c.note("max |Var(p-) - eps_-/2| = " + fmt(worst));
  return c.done();
}

Outcome criterion8() {
  Check c;
  const auto worked = disorder_xi_perturbative(resonance(0.4, 99), {99, {{2.0, 1.0}}});
  c.require(std::abs(worked.xi - 0.45956) <= 1e-4, "(a) xi = " + fmt(worked.xi));

  const DickeParams p6 = resonance(0.5, 6);
  const DisorderEnsemble weak{6, {{2.0, 0.1}}};
  const double formula = disorder_xi_perturbative(p6, weak).xi;
  const double ed40 = dx::disorder_xi_ed(p6, weak, 40).value;
  const double ed50 = dx::disorder_xi_ed(p6, weak, 50).value;
  const double rel = std::abs(ed50 - formula) / formula;
  c.require(rel < 0.02, "(b) |ED - formula| / formula = " + fmt(rel) + " (ED " + fmt(ed50) +
                            ", formula " + fmt(formula) + ")");

  std::vector<double> xi;  // N = 6 .. 1, fraction increasing
  for (int n = 6; n >= 1; --n) {
    const auto a = dx::disorder_xi_ed(resonance(0.5, n), {n, {{2.1, 2.0}}}, 40).value;
    const auto b = dx::disorder_xi_ed(resonance(0.5, n), {n, {{2.1, 2.0}}}, 50).value;
    c.require(std::abs(a - b) < 1e-3, "(c) truncation delta at N=" + std::to_string(n));
    xi.push_back(b);
  }
  for (std::size_t i = 1; i < xi.size(); ++i) {
    c.require(xi[i] > xi[i - 1], "(c) not increasing at N=" + std::to_string(6 - int(i)));
  }
  c.note("(a) " + fmt(worked.xi) + "; (b) ED " + fmt(ed50) + " (n_max 40: " + fmt(ed40) +
         ") vs formula " + fmt(formula) + "; (c) xi " + fmt(xi.front()) + " .. " + fmt(xi.back()));
  return c.done();
}

Outcome criterion9() {
  Check c;
  for (double eta : {0.02, 0.05, 0.1}) {
    const IsingParams ip{eta, 1.0, flat_dispersion(1.0), 0.1, 6};
    const auto gk = critical_coupling_k(ip, 0.0);
    const double gap = std::abs(gk.exact_quadratic - gk.leading);
    c.require(gap <= eta * eta, "(a) gap " + fmt(gap) + " at eta=" + fmt(eta));
  }
  const auto etas = dx::linspace(0.0, 1.5, 16);
  std::vector<double> xi40, xi50;
  for (double eta : etas) {
    xi40.push_back(dx::ising_xi_ed(resonance(0.5, 6), eta, 40).value);
    xi50.push_back(dx::ising_xi_ed(resonance(0.5, 6), eta, 50).value);
  }
  for (std::size_t i = 1; i < etas.size(); ++i) {
    c.require(xi50[i] >= xi50[i - 1] && xi40[i] >= xi40[i - 1],
              "(b) decreases at eta=" + fmt(etas[i]));
  }
  c.require(std::abs(xi50.back() - 1.0) < 0.1, "(b) xi(1.5) = " + fmt(xi50.back()));
  const auto basis = ed::build_basis(6, 40);
  const bool same = ed::bitwise_equal(
      ed::build_dicke_ising_hamiltonian(resonance(0.5, 6), 0.0, basis).matrix,
      ed::build_dicke_hamiltonian(resonance(0.5, 6), basis).matrix);
  c.require(same, "(c) eta=0 matrix differs");
  c.note("(b) xi(0) = " + fmt(xi50.front()) + ", xi(1.5) = " + fmt(xi50.back()));
  return c.done();
}

std::string csv_without_timestamp(const dx::SweepResult& r) {
  std::ostringstream out;
  dx::write_csv(out, r);
  std::istringstream in(out.str());
  std::string line, kept;
  while (std::getline(in, line)) {
    if (line.rfind("# timestamp", 0) == 0) continue;
    kept += line + '\n';
  }
  return kept;
}

Outcome criterion10() {
  Check c;
  // identities over 10^4 draws with g / g_c below 0.999
  const dx::CounterRng rng(10);
  double worst_tr = 0.0, worst_det = 0.0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    DickeParams p{rng.uniform(4 * i, 0.05, 5.0), rng.uniform(4 * i + 1, 0.05, 5.0), 0.0, 1, 0.0};
    if (i % 2) p.a2_coeff = rng.uniform(4 * i + 2, 0.0, 1.0);
    p.g = std::sqrt(p.omega * p.omega0) / 2 * rng.uniform(4 * i + 3, 0.0, 0.999);
    const auto m = normal_modes(p);
    using ld = long double;
    const ld wt2 = ld(p.omega) * (ld(p.omega) + 4 * ld(p.a2_coeff));
    const ld gt = ld(p.g) / std::pow(1 + 4 * ld(p.a2_coeff) / ld(p.omega), ld(0.25));
    const ld w0 = p.omega0;
    const ld tr = wt2 + w0 * w0;
    const ld det = wt2 * w0 * w0 - 4 * gt * gt * std::sqrt(wt2) * w0;
    const ld e1 = ld(m.eps_minus) * m.eps_minus, e2 = ld(m.eps_plus) * m.eps_plus;
    worst_tr = std::max(worst_tr, double(std::abs((e1 + e2 - tr) / tr)));
    worst_det = std::max(worst_det, double(std::abs((e1 * e2 - det) / det)));
  }
  c.require(worst_tr < 1e-12, "trace identity " + fmt(worst_tr));
  c.require(worst_det < 1e-12, "determinant identity " + fmt(worst_det));

  double worst_par = 0.0, worst_s2 = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const auto basis = ed::build_basis(n, 30);
    for (double g : {0.1, 0.3, 0.45}) {
      const auto gs = ed::ground_state(ed::build_dicke_hamiltonian(resonance(g, n), basis));
      worst_par = std::max({worst_par, std::abs(ed::expectation(gs.vector, ed::boson_position(basis))),
                            std::abs(ed::expectation(gs.vector, ed::total_sx(basis)))});
      const double s = n / 2.0;
      worst_s2 = std::max(worst_s2, std::abs(ed::total_spin_expectation(gs.vector, basis) - s * (s + 1)));
    }
  }
  c.require(worst_par < 1e-8, "parity expectation " + fmt(worst_par));
  c.require(worst_s2 < 1e-8, "<S^2> deviation " + fmt(worst_s2));

  const auto cfg = dx::parse_config(R"({"experiment": "sweep", "rng_seed": 1234,
      "quantities": ["xi_disorder_perturbative", "xi_thermal", "ed_var_p_minus_tilde"],
      "random_disorder": {"count": 2, "omega_prime": [1.5, 2.5], "g_prime": [0.0, 0.2]},
      "model": {"g": 0.3, "n_spins": 3}, "grids": {"T": [0.0, 0.1, 0.3]},
      "ed": {"n_max": [20, 24]}})");
  dx::RunOptions two;
  two.jobs = 2;
  const std::string a = csv_without_timestamp(dx::run_experiment(cfg));
  const std::string b = csv_without_timestamp(dx::run_experiment(cfg, two));
  c.require(a == b, "CSV differs between runs");
  c.note("trace " + fmt(worst_tr, 3) + ", det " + fmt(worst_det, 3) + ", parity " + fmt(worst_par, 3) +
         ", S^2 " + fmt(worst_s2, 3) + ", CSV " + std::to_string(a.size()) + " bytes identical");
  return c.done();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 critical point", criterion1},
      {"2 A^2 no-go", criterion2},
      {"3 thermal formula vs Gibbs oracle", criterion3},
      {"4 no squeezing above T=0.55", criterion4},
      {"5 thermal optimum off criticality", criterion5},
      {"6 finite-size ED", criterion6},
      {"7 two-boson oracle", criterion7},
      {"8 disorder", criterion8},
      {"9 Dicke-Ising", criterion9},
      {"10 structural invariants", criterion10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", name, secs,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
