#include "entdyn/runner.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace entdyn {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Circular: return "circular";
    case Family::Uniform: return "uniform";
    case Family::StaticThermal: return "thermal";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "circular") return Family::Circular;
  if (s == "uniform") return Family::Uniform;
  if (s == "thermal" || s == "static_thermal") return Family::StaticThermal;
  throw std::invalid_argument("unknown family: " + s);
}

InitialState parse_initial(const nlohmann::json& j) {
  InitialState s;
  if (j.is_string()) {
    const std::string v = j.get<std::string>();
    if (v == "S") s.kind = InitialStateKind::S;
    else if (v == "A") s.kind = InitialStateKind::A;
    else if (v == "E") s.kind = InitialStateKind::E;
    else if (v == "G") s.kind = InitialStateKind::G;
    else if (v == "bell_ge") s.kind = InitialStateKind::BellGE;
    else throw std::invalid_argument("unknown initial state: " + v);
  } else if (j.is_object() && j.contains("psi_p")) {
    s.kind = InitialStateKind::Psi;
    s.p = j.at("psi_p").get<double>();
  } else {
    throw std::invalid_argument("bad initial state spec");
  }
  return s;
}

}  // namespace

std::string initial_state_name(const InitialState& s) {
  switch (s.kind) {
    case InitialStateKind::S: return "S";
    case InitialStateKind::A: return "A";
    case InitialStateKind::E: return "E";
    case InitialStateKind::G: return "G";
    case InitialStateKind::BellGE: return "bell_ge";
    case InitialStateKind::Psi: return "psi(" + fmt(s.p) + ")";
  }
  return "?";
}

Axis parse_axis(const std::string& name) {
  if (name == "rho" || name == "x") return Axis::Rho;
  if (name == "phi" || name == "y") return Axis::Phi;
  if (name == "z") return Axis::Z;
  throw std::invalid_argument("unknown polarization axis: " + name);
}

std::string axis_name(Axis axis, Family family) {
  const bool circ = family == Family::Circular;
  switch (axis) {
    case Axis::Rho: return circ ? "rho" : "x";
    case Axis::Phi: return circ ? "phi" : "y";
    case Axis::Z: return "z";
  }
  return "?";
}

ScenarioConfig ScenarioConfig::from_json(const nlohmann::json& j) {
  if (!j.contains("schema_version") || j.at("schema_version").get<int>() != 1)
    throw std::invalid_argument("config: schema_version 1 required");
  ScenarioConfig c;
  c.name = j.value("name", std::string("scenario"));
  c.family = parse_family(j.at("family").get<std::string>());
  c.a = j.at("a").get<double>();
  c.L = j.at("L").get<double>();
  if (j.contains("polarization")) {
    const auto& pol = j.at("polarization");
    c.pol1 = pol.at(0).get<std::string>();
    c.pol2 = pol.at(1).get<std::string>();
  }
  if (j.contains("initial")) c.initial = parse_initial(j.at("initial"));
  c.tau_max = j.value("tau_max", 0.0);
  if (j.contains("integrator")) {
    const auto& ji = j.at("integrator");
    c.controls.rel_tol = ji.value("rel_tol", c.controls.rel_tol);
    c.controls.abs_tol = ji.value("abs_tol", c.controls.abs_tol);
    c.controls.sample_interval =
        ji.value("sample_interval", c.controls.sample_interval);
  }
  if (j.contains("sweep")) {
    const auto& js = j.at("sweep");
    const std::string axis = js.at("axis").get<std::string>();
    if (axis == "L") c.sweep.kind = SweepAxis::Kind::L;
    else if (axis == "a") c.sweep.kind = SweepAxis::Kind::A;
    else throw std::invalid_argument("sweep axis must be 'L' or 'a'");
    c.sweep.min = js.at("min").get<double>();
    c.sweep.max = js.at("max").get<double>();
    c.sweep.count = js.at("count").get<int>();
  }
  c.validate();
  return c;
}

nlohmann::json ScenarioConfig::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["name"] = name;
  j["family"] = family_name(family);
  j["a"] = a;
  j["L"] = L;
  j["polarization"] = {pol1, pol2};
  if (initial.kind == InitialStateKind::Psi)
    j["initial"] = {{"psi_p", initial.p}};
  else
    j["initial"] = initial_state_name(initial);
  if (tau_max > 0) j["tau_max"] = tau_max;
  j["integrator"] = {{"rel_tol", controls.rel_tol},
                     {"abs_tol", controls.abs_tol},
                     {"sample_interval", controls.sample_interval}};
  if (sweep.kind != SweepAxis::Kind::None) {
    j["sweep"] = {{"axis", sweep.kind == SweepAxis::Kind::L ? "L" : "a"},
                  {"min", sweep.min},
                  {"max", sweep.max},
                  {"count", sweep.count}};
  }
  return j;
}

void ScenarioConfig::validate() const {
  parse_axis(pol1);
  parse_axis(pol2);
  if (!(L > 0)) throw std::invalid_argument("config: L must be > 0");
  if (family != Family::StaticThermal && !(a > 0))
    throw std::invalid_argument("config: a must be > 0");
  if (family == Family::StaticThermal && !(a >= 0))
    throw std::invalid_argument("config: a must be >= 0");
  if (sweep.kind != SweepAxis::Kind::None) {
    if (!(sweep.count >= 1) || !(sweep.max > sweep.min))
      throw std::invalid_argument("config: sweep grid must be increasing");
  }
  if (initial.kind == InitialStateKind::Psi &&
      !(initial.p > 0 && initial.p < 1))
    throw std::invalid_argument("config: psi_p must lie in (0,1)");
}

KinematicParams ScenarioConfig::kinematics() const {
  switch (family) {
    case Family::Circular:
      // production correlators are the v->1 closed forms; the recorded v
      // only matters for the generic-velocity cross-checks
      return KinematicParams::circular(a, 0.999999, L);
    case Family::Uniform:
      return KinematicParams::uniform(a, L);
    case Family::StaticThermal:
      return KinematicParams::static_thermal(a, L);
  }
  throw std::logic_error("unreachable");
}

DipoleConfig ScenarioConfig::dipoles() const {
  return DipoleConfig::from_axes(parse_axis(pol1), parse_axis(pol2));
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  config.validate();
  if (config.sweep.kind != SweepAxis::Kind::None)
    throw std::invalid_argument("run_scenario: config has a sweep axis");
  ScenarioResult res;
  res.config = config;
  try {
    res.rates = rate_coefficients(config.kinematics(), config.dipoles(), 1.0,
                                  config.correlator);
    const double tmax =
        config.tau_max > 0 ? config.tau_max : default_tau_max(res.rates);
    res.trajectory = evolve(initial_state(config.initial), res.rates, tmax,
                            config.controls);
    res.events = detect_events(res.trajectory);
  } catch (const std::exception& e) {
    res.failed = true;
    res.error = std::string(e.what()) + " [config " + config.name + "]";
  }
  return res;
}

SweepResult sweep_max_concurrence(const ScenarioConfig& config) {
  config.validate();
  if (config.sweep.kind == SweepAxis::Kind::None)
    throw std::invalid_argument("sweep_max_concurrence: no sweep axis");
  if (config.sweep.count < 1)
    throw std::invalid_argument("sweep_max_concurrence: empty grid");

  SweepResult out;
  out.config = config;
  for (int i = 0; i < config.sweep.count; ++i) {
    const double x =
        config.sweep.count == 1
            ? config.sweep.min
            : config.sweep.min + (config.sweep.max - config.sweep.min) * i /
                                     (config.sweep.count - 1);
    ScenarioConfig point = config;
    point.sweep = SweepAxis{};
    if (config.sweep.kind == SweepAxis::Kind::L)
      point.L = x;
    else
      point.a = x;
    const ScenarioResult r = run_scenario(point);
    if (r.failed) {
      out.failed = true;
      out.error = r.error;
      out.points.push_back({x, 0.0, false});
      continue;
    }
    SweepPoint sp;
    sp.axis_value = x;
    sp.max_concurrence = r.events.max_concurrence;
    sp.entangled = sp.max_concurrence > kSweepThreshold;
    out.points.push_back(sp);
  }
  for (const auto& p : out.points)
    if (p.entangled) {
      if (!out.window)
        out.window = {p.axis_value, p.axis_value};
      else
        out.window->second = p.axis_value;
    }
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out = sweep.config.sweep.kind == SweepAxis::Kind::L
                        ? "L,max_concurrence,entangled\n"
                        : "a,max_concurrence,entangled\n";
  for (const auto& p : sweep.points)
    out += fmt(p.axis_value) + "," + fmt(p.max_concurrence) + "," +
           (p.entangled ? "1" : "0") + "\n";
  return out;
}

std::string summary_csv_header() {
  return "family,a,L,pol1,pol2,initial,max_concurrence,arg_max_tau,death_"
         "time,birth_time,n_revivals,enhanced\n";
}

std::string summary_csv_row(const ScenarioResult& r) {
  const ScenarioConfig& c = r.config;
  std::string row = family_name(c.family) + "," + fmt(c.a) + "," + fmt(c.L) +
                    "," + c.pol1 + "," + c.pol2 + "," +
                    initial_state_name(c.initial) + ",";
  if (r.failed) {
    row += ",,,,,error:" + r.error + "\n";
    return row;
  }
  row += fmt(r.events.max_concurrence) + "," + fmt(r.events.arg_max_tau) + ",";
  row += r.events.death_time ? fmt(*r.events.death_time) : std::string();
  row += ",";
  row += r.events.birth_time ? fmt(*r.events.birth_time) : std::string();
  row += ",";
  row += std::to_string(r.events.revival_intervals.size());
  row += ",";
  row += r.events.enhanced ? "1" : "0";
  row += "\n";
  return row;
}

std::vector<ScenarioResult> parallel_grid(
    const std::vector<ScenarioConfig>& configs, int workers) {
  std::vector<ScenarioResult> results(configs.size());
  if (configs.empty()) return results;
  workers = std::max(1, std::min<int>(workers, configs.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= configs.size()) return;
      try {
        results[i] = run_scenario(configs[i]);
      } catch (const std::exception& e) {
        results[i].config = configs[i];
        results[i].failed = true;
        results[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return results;
}

int run_batch(const std::vector<ScenarioConfig>& configs,
              const std::string& out_dir, int workers) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  std::vector<ScenarioConfig> plain;
  std::vector<ScenarioConfig> sweeps;
  for (const auto& c : configs)
    (c.sweep.kind == SweepAxis::Kind::None ? plain : sweeps).push_back(c);

  int failures = 0;
  std::vector<ScenarioResult> results = parallel_grid(plain, workers);
  std::string summary = summary_csv_header();
  for (const auto& r : results) {
    summary += summary_csv_row(r);
    if (r.failed) {
      ++failures;
      continue;
    }
    std::ofstream(fs::path(out_dir) / (r.config.name + ".traj.csv"))
        << trajectory_csv(r.trajectory);
    std::ofstream(fs::path(out_dir) / (r.config.name + ".events.json"))
        << events_json(r.events) << "\n";
  }

  // sweeps run their grid points through the same pool, one sweep at a time
  for (const auto& c : sweeps) {
    SweepResult s = sweep_max_concurrence(c);
    if (s.failed) ++failures;
    std::ofstream(fs::path(out_dir) / (c.name + ".sweep.csv")) << sweep_csv(s);
  }

  std::ofstream(fs::path(out_dir) / "summary.csv") << summary;
  return failures;
}

namespace {

ScenarioConfig base_config(const std::string& name, Family fam, double a,
                           double L, const std::string& pol1,
                           const std::string& pol2, InitialState init) {
  ScenarioConfig c;
  c.name = name;
  c.family = fam;
  c.a = a;
  c.L = L;
  c.pol1 = pol1;
  c.pol2 = pol2;
  c.initial = init;
  return c;
}

std::vector<ScenarioConfig> degradation_preset(const std::string& prefix,
                                               InitialStateKind kind,
                                               const std::string& pol) {
  std::vector<ScenarioConfig> out;
  InitialState init{kind, 0};
  for (Family fam :
       {Family::Circular, Family::Uniform, Family::StaticThermal})
    for (double a : {0.25, 1.0, 2.0}) {
      ScenarioConfig c = base_config(
          prefix + "_" + family_name(fam) + "_a" + fmt(a), fam, a, 1.0, pol,
          pol, init);
      out.push_back(c);
    }
  return out;
}

std::vector<ScenarioConfig> generation_preset(const std::string& prefix,
                                              const std::string& pol) {
  std::vector<ScenarioConfig> out;
  InitialState init{InitialStateKind::E, 0};
  for (Family fam :
       {Family::Circular, Family::Uniform, Family::StaticThermal})
    for (double a : {0.2, 0.5, 1.2}) {
      ScenarioConfig c = base_config(
          prefix + "_" + family_name(fam) + "_a" + fmt(a), fam, a, 0.5, pol,
          pol, init);
      out.push_back(c);
    }
  return out;
}

std::vector<ScenarioConfig> sweep_preset(const std::string& prefix,
                                         SweepAxis::Kind kind,
                                         const std::string& pol1,
                                         const std::string& pol2) {
  std::vector<ScenarioConfig> out;
  InitialState init{InitialStateKind::E, 0};
  for (Family fam :
       {Family::Circular, Family::Uniform, Family::StaticThermal}) {
    ScenarioConfig c =
        base_config(prefix + "_" + family_name(fam), fam,
                    kind == SweepAxis::Kind::L ? 2.0 / 3.0 : 1.0,
                    kind == SweepAxis::Kind::L ? 1.0 : 0.5, pol1, pol2, init);
    c.sweep.kind = kind;
    if (kind == SweepAxis::Kind::L) {
      c.sweep.min = 0.1;
      c.sweep.max = 4.0;
      c.sweep.count = 40;
    } else {
      c.sweep.min = 0.1;
      c.sweep.max = 2.0;
      c.sweep.count = 40;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<ScenarioConfig> superposition_preset(const std::string& prefix,
                                                 double p,
                                                 const std::string& pol) {
  std::vector<ScenarioConfig> out;
  InitialState init{InitialStateKind::Psi, p};
  for (Family fam :
       {Family::Circular, Family::Uniform, Family::StaticThermal}) {
    out.push_back(base_config(prefix + "_" + family_name(fam), fam, 0.5, 1.0,
                              pol, pol, init));
  }
  return out;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig1-left",   "fig1-right",  "fig2-left",  "fig2-right",
          "fig3-left",   "fig3-right",  "fig4-left",  "fig4-middle",
          "fig4-right",  "fig5-left",   "fig5-middle", "fig5-right",
          "fig6-left",   "fig6-right",  "fig7-left",  "fig7-right"};
}

std::vector<ScenarioConfig> preset_configs(const std::string& preset) {
  if (preset == "fig1-left")
    return degradation_preset(preset, InitialStateKind::S, "z");
  if (preset == "fig1-right")
    return degradation_preset(preset, InitialStateKind::A, "z");
  if (preset == "fig2-left")
    return degradation_preset(preset, InitialStateKind::S, "phi");
  if (preset == "fig2-right")
    return degradation_preset(preset, InitialStateKind::A, "phi");
  if (preset == "fig3-left") return generation_preset(preset, "z");
  if (preset == "fig3-right") return generation_preset(preset, "phi");
  if (preset == "fig4-left")
    return sweep_preset(preset, SweepAxis::Kind::L, "z", "z");
  if (preset == "fig4-middle")
    return sweep_preset(preset, SweepAxis::Kind::L, "phi", "phi");
  if (preset == "fig4-right")
    return sweep_preset(preset, SweepAxis::Kind::L, "rho", "z");
  if (preset == "fig5-left")
    return sweep_preset(preset, SweepAxis::Kind::A, "z", "z");
  if (preset == "fig5-middle")
    return sweep_preset(preset, SweepAxis::Kind::A, "phi", "phi");
  if (preset == "fig5-right")
    return sweep_preset(preset, SweepAxis::Kind::A, "rho", "z");
  if (preset == "fig6-left") return superposition_preset(preset, 0.25, "z");
  if (preset == "fig6-right") return superposition_preset(preset, 0.75, "z");
  if (preset == "fig7-left") return superposition_preset(preset, 0.25, "phi");
  if (preset == "fig7-right") return superposition_preset(preset, 0.75, "phi");
  throw std::invalid_argument("unknown preset: " + preset);
}

}  // namespace entdyn
