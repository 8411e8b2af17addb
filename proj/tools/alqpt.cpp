// Copyright 2026 The alqpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "alqpt/experiment.hpp"
#include "alqpt/verify.hpp"

namespace {

struct CommonOverrides {
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::size_t threads = 0;
  bool threads_set = false;
};

void apply_overrides(alqpt::ExperimentConfig& config, const CommonOverrides& o) {
  if (!o.out_dir.empty()) config.out_dir = o.out_dir;
  if (o.seed_set) config.base_seed = o.seed;
  if (o.threads_set) config.threads = o.threads;
}

int run_config(const alqpt::ExperimentConfig& config) {
  std::cout << "running: n=" << config.n_qubits << " budget=" << config.budget
            << " repeats=" << config.repeats << " strategies=";
  for (std::size_t i = 0; i < config.strategies.size(); ++i) {
    std::cout << (i ? "," : "") << alqpt::strategy_name(config.strategies[i]);
  }
  std::cout << std::endl;
  const alqpt::ExperimentResult result = alqpt::run_experiment(config);
  alqpt::write_experiment_outputs(config, result, config.out_dir);
  std::cout << "wrote " << result.records.size() << " records to "
            << config.out_dir << "/records.csv" << std::endl;
  return 0;
}

bool parse_range(const std::string& text, std::size_t& lo, std::size_t& hi) {
  const auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      lo = hi = std::stoul(text);
    } else {
      lo = std::stoul(text.substr(0, pos));
      hi = std::stoul(text.substr(pos + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 1 && lo <= hi;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"active-learning quantum process tomography harness"};
  app.require_subcommand(1);

  CommonOverrides overrides;
  std::string config_path;
  std::string qubit_range = "2..4";
  std::size_t sweep_repeats = 0;
  std::size_t sweep_budget = 0;
  std::size_t sweep_epochs = 0;
  std::string sweep_strategies;

  CLI::App* run = app.add_subcommand("run", "run one experiment from a config file");
  run->add_option("--config", config_path, "JSON config mirroring ExperimentConfig")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--out", overrides.out_dir, "output directory for CSV/JSON");
  run->add_option("--seed", overrides.seed, "base seed override")
      ->each([&](const std::string&) { overrides.seed_set = true; });
  run->add_option("--threads", overrides.threads, "worker thread count (0 = auto)")
      ->each([&](const std::string&) { overrides.threads_set = true; });

  CLI::App* sweep = app.add_subcommand("sweep", "run the default experiment for a qubit range");
  sweep->add_option("--qubits", qubit_range, "qubit range, e.g. 2..4")
      ->capture_default_str();
  sweep->add_option("--out", overrides.out_dir, "output directory root");
  sweep->add_option("--seed", overrides.seed, "base seed override")
      ->each([&](const std::string&) { overrides.seed_set = true; });
  sweep->add_option("--threads", overrides.threads, "worker thread count (0 = auto)")
      ->each([&](const std::string&) { overrides.threads_set = true; });
  sweep->add_option("--repeats", sweep_repeats, "repeats per experiment");
  sweep->add_option("--budget", sweep_budget, "label budget (default: full pool)");
  sweep->add_option("--epochs", sweep_epochs, "training epochs per AL step");
  sweep->add_option("--strategies", sweep_strategies,
                    "comma-separated subset of QBC,EMCM,GS,RAND");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant self-checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify)) {
      return alqpt::run_self_checks(std::cout) ? 0 : 1;
    }
    if (app.got_subcommand(run)) {
      alqpt::ExperimentConfig config = alqpt::load_config_file(config_path);
      apply_overrides(config, overrides);
      alqpt::validate_config(config);
      return run_config(config);
    }
    // sweep
    std::size_t lo = 0;
    std::size_t hi = 0;
    if (!parse_range(qubit_range, lo, hi) || lo < 2 || hi > 7) {
      std::cerr << "bad --qubits range '" << qubit_range << "' (want a..b in 2..7)"
                << std::endl;
      return 2;
    }
    const std::string root = overrides.out_dir.empty() ? "out" : overrides.out_dir;
    for (std::size_t n = lo; n <= hi; ++n) {
      alqpt::ExperimentConfig config;
      config.n_qubits = n;
      config.vqc_depth = alqpt::default_vqc_depth(n);
      config.target_depth = config.vqc_depth;
      config.budget = 1;
      for (std::size_t q = 0; q < n; ++q) config.budget *= 4;
      if (sweep_budget != 0) config.budget = sweep_budget;
      if (sweep_repeats != 0) config.repeats = sweep_repeats;
      if (sweep_epochs != 0) config.schedule.epochs = sweep_epochs;
      if (!sweep_strategies.empty()) {
        config.strategies.clear();
        std::string rest = sweep_strategies;
        while (!rest.empty()) {
          const auto comma = rest.find(',');
          config.strategies.push_back(
              alqpt::strategy_from_name(rest.substr(0, comma)));
          rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
        }
      }
      apply_overrides(config, overrides);
      config.out_dir = root + "/n" + std::to_string(n);
      alqpt::validate_config(config);
      run_config(config);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }
}
