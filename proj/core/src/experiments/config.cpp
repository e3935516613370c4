#include "dicke/experiments/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "dicke/experiments/rng.hpp"
#include "json.hpp"

namespace dicke::experiments {

using Json = nlohmann::ordered_json;

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::Fig2: return "fig2";
    case Experiment::Fig3: return "fig3";
    case Experiment::Fig4: return "fig4";
    case Experiment::Fig5: return "fig5";
    case Experiment::Fig6: return "fig6";
    case Experiment::Fig7: return "fig7";
    case Experiment::Sweep: return "sweep";
  }
  return "unknown";
}

Experiment parse_experiment(std::string_view name) {
  for (Experiment e : {Experiment::Fig2, Experiment::Fig3, Experiment::Fig4,
                       Experiment::Fig5, Experiment::Fig6, Experiment::Fig7,
                       Experiment::Sweep}) {
    if (to_string(e) == name) return e;
  }
  throw ConfigError("unknown experiment '" + std::string(name) +
                    "' (expected fig2..fig7 or sweep)");
}

const Axis* SweepConfig::axis(std::string_view name) const {
  for (const auto& a : grids) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw ConfigError("linspace count must be >= 1");
  if (count == 1) return {lo};
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  }
  v.back() = hi;
  return v;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, x >>= 4) s[static_cast<std::size_t>(i)] = digits[x & 0xf];
  return s;
}

SweepConfig default_config(Experiment e) {
  SweepConfig c;
  c.experiment = e;
  c.model = DickeParams{1.0, 1.0, 0.0, 1, 0.0};
  switch (e) {
    case Experiment::Fig2:
      c.grids = {{"g", linspace(0.0, 1.0, 201)}};
      break;
    case Experiment::Fig3:
      c.model.g = 0.5;
      c.grids = {{"n_spins", {1, 2, 3, 4, 5, 6, 7}}};
      break;
    case Experiment::Fig4:
      c.grids = {{"omega0", {1.0, 2.0}},
                 {"gc_minus_g", linspace(0.0, 0.5, 26)},
                 {"T", linspace(0.0, 0.6, 31)}};
      break;
    case Experiment::Fig5:
      c.model.g = 0.1;
      c.grids = {{"T", linspace(0.001, 0.05, 50)},
                 {"omega0", linspace(0.04, 0.2, 161)}};
      break;
    case Experiment::Fig6:
      c.model.g = 0.5;
      c.grids = {{"n_spins", {1, 2, 3, 4, 5, 6}}};
      c.defects = {{2.1, 2.0}};
      break;
    case Experiment::Fig7:
      c.model.g = 0.5;
      c.model.n_spins = 6;
      c.grids = {{"eta", linspace(0.0, 1.5, 16)}};
      break;
    case Experiment::Sweep:
      break;
  }
  return c;
}

namespace {

const std::set<std::string> kAxisNames = {
    "omega", "omega0", "g", "n_spins", "a2_coeff", "T",
    "eta",   "k",      "gc_minus_g"};

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw ConfigError(what + " must be a number");
  return j.get<double>();
}

std::vector<double> parse_grid(const Json& j, const std::string& name) {
  if (j.is_array()) {
    std::vector<double> v;
    for (const auto& x : j) v.push_back(number(x, "grid '" + name + "' entry"));
    return v;
  }
  if (j.is_object() && j.size() == 1 && j.contains("linspace")) {
    const Json& t = j.at("linspace");
    if (!t.is_array() || t.size() != 3) {
      throw ConfigError("grid '" + name + "': linspace needs [min, max, count]");
    }
    const double count = number(t[2], "linspace count");
    if (count != std::floor(count) || count < 1) {
      throw ConfigError("grid '" + name + "': linspace count must be a positive integer");
    }
    return linspace(number(t[0], "linspace min"), number(t[1], "linspace max"),
                    static_cast<int>(count));
  }
  if (j.is_number()) return {j.get<double>()};
  throw ConfigError("grid '" + name + "' must be a list or {\"linspace\": [min, max, count]}");
}

void check_keys(const Json& j, const std::set<std::string>& allowed,
                const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
    }
  }
}

void parse_model(const Json& j, DickeParams& p) {
  if (!j.is_object()) throw ConfigError("model must be an object");
  check_keys(j, {"omega", "omega0", "g", "n_spins", "a2_coeff"}, "model");
  if (j.contains("omega")) p.omega = number(j["omega"], "model.omega");
  if (j.contains("omega0")) p.omega0 = number(j["omega0"], "model.omega0");
  if (j.contains("g")) p.g = number(j["g"], "model.g");
  if (j.contains("a2_coeff")) p.a2_coeff = number(j["a2_coeff"], "model.a2_coeff");
  if (j.contains("n_spins")) {
    if (!j["n_spins"].is_number_integer()) throw ConfigError("model.n_spins must be an integer");
    p.n_spins = j["n_spins"].get<int>();
  }
}

void parse_ed(const Json& j, EdSettings& ed) {
  if (!j.is_object()) throw ConfigError("ed must be an object");
  check_keys(j, {"n_max", "tolerance", "method"}, "ed");
  if (j.contains("n_max")) {
    ed.n_max.clear();
    const Json& n = j["n_max"];
    if (n.is_number_integer()) {
      ed.n_max.push_back(n.get<int>());
    } else if (n.is_array()) {
      for (const auto& x : n) {
        if (!x.is_number_integer()) throw ConfigError("ed.n_max entries must be integers");
        ed.n_max.push_back(x.get<int>());
      }
    } else {
      throw ConfigError("ed.n_max must be an integer or a list");
    }
  }
  if (j.contains("tolerance")) ed.tolerance = number(j["tolerance"], "ed.tolerance");
  if (j.contains("method")) {
    const std::string m = j["method"].get<std::string>();
    if (m == "auto") ed.method = ed::SolverMethod::Auto;
    else if (m == "lanczos") ed.method = ed::SolverMethod::Lanczos;
    else if (m == "dense") ed.method = ed::SolverMethod::Dense;
    else throw ConfigError("ed.method must be auto, lanczos or dense");
  }
}

std::pair<double, double> range(const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(what + " must be [min, max]");
  return {number(j[0], what), number(j[1], what)};
}

LadderParams parse_ladder(const Json& j) {
  if (!j.is_object()) throw ConfigError("ladder must be an object");
  check_keys(j, {"j_r", "j_b", "j_rb_x", "j_rb_y", "j_rb_z", "omega_r",
                 "omega_b", "n_sites"},
             "ladder");
  LadderParams lp;
  if (j.contains("j_r")) lp.j_r = number(j["j_r"], "ladder.j_r");
  if (j.contains("j_b")) lp.j_b = number(j["j_b"], "ladder.j_b");
  if (j.contains("j_rb_x")) lp.j_rb_x = number(j["j_rb_x"], "ladder.j_rb_x");
  if (j.contains("j_rb_y")) lp.j_rb_y = number(j["j_rb_y"], "ladder.j_rb_y");
  if (j.contains("j_rb_z")) lp.j_rb_z = number(j["j_rb_z"], "ladder.j_rb_z");
  if (j.contains("omega_r")) lp.omega_r = number(j["omega_r"], "ladder.omega_r");
  if (j.contains("omega_b")) lp.omega_b = number(j["omega_b"], "ladder.omega_b");
  if (j.contains("n_sites")) {
    if (!j["n_sites"].is_number_integer()) throw ConfigError("ladder.n_sites must be an integer");
    lp.n_sites = j["n_sites"].get<int>();
  }
  return lp;
}

}  // namespace

SweepConfig parse_config(std::string_view json_text,
                         std::optional<Experiment> experiment) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  check_keys(j,
             {"experiment", "model", "grids", "ed", "rng_seed", "output",
              "defects", "random_disorder", "quantity", "quantities",
              "mask_superradiant", "ladder", "convergence_report", "notes"},
             "config");

  std::optional<Experiment> named;
  if (j.contains("experiment")) {
    if (!j["experiment"].is_string()) throw ConfigError("experiment must be a string");
    named = parse_experiment(j["experiment"].get<std::string>());
  }
  if (experiment && named && *experiment != *named) {
    throw ConfigError("config is for '" + std::string(to_string(*named)) +
                      "' but '" + std::string(to_string(*experiment)) +
                      "' was requested");
  }
  const Experiment e = experiment ? *experiment
                                  : named ? *named : Experiment::Sweep;

  try {
    SweepConfig c = default_config(e);
    if (j.contains("model")) parse_model(j["model"], c.model);
    if (j.contains("grids")) {
      const Json& g = j["grids"];
      if (!g.is_object()) throw ConfigError("grids must be an object");
      for (auto it = g.begin(); it != g.end(); ++it) {
        if (!kAxisNames.count(it.key())) {
          throw ConfigError("unknown grid axis '" + it.key() + "'");
        }
        Axis a{it.key(), parse_grid(it.value(), it.key())};
        bool replaced = false;
        for (auto& existing : c.grids) {
          if (existing.name == a.name) {
            existing.values = a.values;
            replaced = true;
          }
        }
        if (!replaced) c.grids.push_back(std::move(a));
      }
    }
    if (j.contains("ed")) parse_ed(j["ed"], c.ed);
    if (j.contains("rng_seed")) {
      if (!j["rng_seed"].is_number_unsigned()) {
        throw ConfigError("rng_seed must be a non-negative integer");
      }
      c.rng_seed = j["rng_seed"].get<std::uint64_t>();
    }
    if (j.contains("output")) c.output = j["output"].get<std::string>();
    if (j.contains("defects")) {
      c.defects.clear();
      if (!j["defects"].is_array()) throw ConfigError("defects must be a list");
      for (const auto& d : j["defects"]) {
        check_keys(d, {"omega_prime", "g_prime"}, "defects entry");
        c.defects.push_back({number(d.value("omega_prime", Json(1.0)), "omega_prime"),
                             number(d.value("g_prime", Json(0.0)), "g_prime")});
      }
    }
    if (j.contains("random_disorder")) {
      const Json& r = j["random_disorder"];
      check_keys(r, {"count", "omega_prime", "g_prime"}, "random_disorder");
      RandomDisorder rd;
      if (r.contains("count")) rd.count = r["count"].get<int>();
      if (r.contains("omega_prime")) {
        std::tie(rd.omega_min, rd.omega_max) = range(r["omega_prime"], "random_disorder.omega_prime");
      }
      if (r.contains("g_prime")) {
        std::tie(rd.g_min, rd.g_max) = range(r["g_prime"], "random_disorder.g_prime");
      }
      c.random_disorder = rd;
    }
    if (j.contains("quantity")) c.quantities = {j["quantity"].get<std::string>()};
    if (j.contains("quantities")) {
      c.quantities = j["quantities"].get<std::vector<std::string>>();
    }
    if (j.contains("mask_superradiant")) c.mask_superradiant = j["mask_superradiant"].get<bool>();
    if (j.contains("ladder")) c.ladder = parse_ladder(j["ladder"]);
    if (j.contains("convergence_report")) {
      c.convergence_report = j["convergence_report"].get<bool>();
    }
    if (j.contains("notes")) c.notes = j["notes"].get<std::string>();
    c.canonical = std::string(to_string(e)) + "\n" + j.dump();
    validate_config(c);
    return c;
  } catch (const Json::exception& ex) {
    throw ConfigError(std::string("config type error: ") + ex.what());
  }
}

SweepConfig load_config(const std::string& path,
                        std::optional<Experiment> experiment) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), experiment);
}

void validate_config(const SweepConfig& c) {
  try {
    validate_params(c.model);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("model: ") + e.what());
  }
  for (const auto& a : c.grids) {
    if (a.values.empty()) throw ConfigError("grid '" + a.name + "' is empty");
    for (double v : a.values) {
      if (!std::isfinite(v)) throw ConfigError("grid '" + a.name + "' has a non-finite value");
    }
    if (a.name == "n_spins") {
      for (double v : a.values) {
        if (v != std::floor(v) || v < 1) {
          throw ConfigError("grid 'n_spins' needs positive integers");
        }
      }
    }
  }
  if (c.ed.n_max.empty()) throw ConfigError("ed.n_max is empty");
  for (int n : c.ed.n_max) {
    if (n < 1) throw ConfigError("ed.n_max entries must be >= 1");
  }
  if (!(c.ed.tolerance > 0.0)) throw ConfigError("ed.tolerance must be > 0");
  const bool uses_ed = c.experiment == Experiment::Fig3 ||
                       c.experiment == Experiment::Fig6 ||
                       c.experiment == Experiment::Fig7;
  if (uses_ed && c.convergence_report && c.ed.n_max.size() < 2) {
    throw ConfigError("a convergence report needs at least 2 n_max values");
  }
  if (c.experiment == Experiment::Sweep && c.quantities.empty()) {
    throw ConfigError("sweep needs 'quantity' or 'quantities'");
  }
  if (c.random_disorder) {
    const auto& r = *c.random_disorder;
    if (r.count < 0) throw ConfigError("random_disorder.count must be >= 0");
    if (r.omega_min > r.omega_max || r.g_min > r.g_max) {
      throw ConfigError("random_disorder ranges must be [min, max]");
    }
    if (r.g_min < 0) throw ConfigError("random_disorder.g_prime must be >= 0");
  }
  for (const auto& d : c.defects) {
    if (d.omega_prime == 0.0) throw ConfigError("defect omega_prime must be nonzero");
    if (d.g_prime < 0.0) throw ConfigError("defect g_prime must be >= 0");
  }
  if (c.ladder) {
    try {
      validate_ladder(*c.ladder);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("ladder: ") + e.what());
    }
  }
}

DisorderEnsemble resolve_ensemble(const SweepConfig& cfg, int n_clean) {
  DisorderEnsemble d;
  d.n_clean = n_clean;
  if (!cfg.random_disorder) {
    d.defects = cfg.defects;
    return d;
  }
  const RandomDisorder& r = *cfg.random_disorder;
  CounterRng rng(cfg.rng_seed);
  for (int i = 0; i < r.count; ++i) {
    const double w = rng.uniform(2 * static_cast<std::uint64_t>(i), r.omega_min, r.omega_max);
    const double g = rng.uniform(2 * static_cast<std::uint64_t>(i) + 1, r.g_min, r.g_max);
    if (w == 0.0) throw ConfigError("random defect drew omega_prime = 0");
    d.defects.push_back({w, g});
  }
  return d;
}

}  // namespace dicke::experiments
