#ifndef ENTDYN_RUNNER_HPP
#define ENTDYN_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "entdyn/concurrence.hpp"

// Scenario configuration, figure presets, parameter sweeps and batch
// execution with tabular output.

namespace entdyn {

struct SweepAxis {
  enum class Kind { None, L, A };
  Kind kind = Kind::None;
  double min = 0, max = 0;
  int count = 0;
};

struct ScenarioConfig {
  std::string name = "scenario";
  Family family = Family::Circular;
  double a = 1.0;
  double L = 1.0;
  std::string pol1 = "z";  // rho|phi|z (x and y accepted as aliases)
  std::string pol2 = "z";
  InitialState initial;
  double tau_max = 0;  // 0: pick 12 / (2(A1+A2))
  IntegratorControls controls;
  SweepAxis sweep;
  CorrelatorOptions correlator;

  static ScenarioConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  void validate() const;

  KinematicParams kinematics() const;
  DipoleConfig dipoles() const;
};

Axis parse_axis(const std::string& name);
std::string axis_name(Axis axis, Family family);

struct ScenarioResult {
  ScenarioConfig config;
  RateCoefficients rates;
  StateTrajectory trajectory;
  EntanglementEvents events;
  bool failed = false;
  std::string error;
};

// rates -> evolution -> events for a single (non-sweep) configuration.
ScenarioResult run_scenario(const ScenarioConfig& config);

struct SweepPoint {
  double axis_value = 0;
  double max_concurrence = 0;
  bool entangled = false;  // max above the window threshold
};

struct SweepResult {
  ScenarioConfig config;
  std::vector<SweepPoint> points;
  std::optional<std::pair<double, double>> window;  // entanglement window
  bool failed = false;
  std::string error;
};

// Threshold separating true generation from integrator noise.
constexpr double kSweepThreshold = 1e-4;

SweepResult sweep_max_concurrence(const ScenarioConfig& config);

// axis,max_concurrence,entangled
std::string sweep_csv(const SweepResult& sweep);

// family,a,L,pol1,pol2,initial,max_concurrence,arg_max_tau,death_time,
// birth_time,n_revivals,enhanced
std::string summary_csv_header();
std::string summary_csv_row(const ScenarioResult& r);

// Concurrent execution over a worker pool; per-config failures are
// recorded in the results, the batch always completes.
std::vector<ScenarioResult> parallel_grid(
    const std::vector<ScenarioConfig>& configs, int workers);

// Run every config (sweeps included), write trajectory CSVs, events JSON,
// sweep CSVs and summary.csv under out_dir. Returns the number of failures.
int run_batch(const std::vector<ScenarioConfig>& configs,
              const std::string& out_dir, int workers);

std::vector<std::string> preset_names();
std::vector<ScenarioConfig> preset_configs(const std::string& preset);

std::string initial_state_name(const InitialState& s);

}  // namespace entdyn

#endif
