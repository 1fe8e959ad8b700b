// Batch CLI: run scenario configs or figure presets and write trajectory,
// events and summary tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "entdyn/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "entdyn: entanglement dynamics of accelerated two-level atoms"};

  std::string config_path, preset, out_dir = "out";
  int workers = 4;
  bool list_presets = false;
  app.add_option("--config", config_path, "JSON scenario config (object or array)");
  app.add_option("--preset", preset, "named figure preset");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--workers", workers, "worker thread count");
  app.add_flag("--list-presets", list_presets, "list preset names and exit");

  CLI11_PARSE(app, argc, argv);

  if (list_presets) {
    for (const auto& n : entdyn::preset_names()) std::cout << n << "\n";
    return 0;
  }

  std::vector<entdyn::ScenarioConfig> configs;
  try {
    if (!preset.empty()) {
      configs = entdyn::preset_configs(preset);
    } else if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot open " + config_path);
      nlohmann::json j;
      in >> j;
      if (j.is_array())
        for (const auto& item : j)
          configs.push_back(entdyn::ScenarioConfig::from_json(item));
      else
        configs.push_back(entdyn::ScenarioConfig::from_json(j));
    } else {
      std::cerr << "error: provide --config or --preset\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  try {
    const int failures = entdyn::run_batch(configs, out_dir, workers);
    if (failures > 0) {
      std::cerr << failures << " scenario(s) failed; see summary.csv\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  std::cout << "wrote results for " << configs.size() << " config(s) to "
            << out_dir << "\n";
  return 0;
}
