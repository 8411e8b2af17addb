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

#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "alqpt/experiment.hpp"

namespace alqpt {

namespace {

using nlohmann::json;

const char* probe_mode_name(ProbeMode mode) {
  return mode == ProbeMode::StandardIC ? "standard_ic" : "literal_pauli";
}

ProbeMode probe_mode_from_name(const std::string& name) {
  if (name == "standard_ic") return ProbeMode::StandardIC;
  if (name == "literal_pauli") return ProbeMode::LiteralPauli;
  throw std::invalid_argument("config: unknown probe_mode '" + name + "'");
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out << text;
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace

std::string params_to_json(const ParamVector& params) {
  return json(params).dump();
}

ParamVector params_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (!j.is_array()) {
    throw std::invalid_argument("params json: expected a flat array");
  }
  ParamVector out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) {
      throw std::invalid_argument("params json: non-numeric entry");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::string summary_to_json(const std::vector<SummaryRow>& summary) {
  json strategies = json::array();
  json* current = nullptr;
  std::string current_name;
  for (const SummaryRow& row : summary) {
    const std::string& name = strategy_name(row.strategy);
    if (current == nullptr || name != current_name) {
      strategies.push_back(json{{"strategy", name}, {"points", json::array()}});
      current = &strategies.back();
      current_name = name;
    }
    json point{{"labels_used", row.labels_used},
               {"mean_similarity", row.mean_similarity},
               {"std_similarity", row.std_similarity},
               {"mean_loss", row.mean_loss}};
    point["improvement"] =
        row.improvement.has_value() ? json(*row.improvement) : json(nullptr);
    (*current)["points"].push_back(std::move(point));
  }
  return json{{"strategies", std::move(strategies)}}.dump(2) + "\n";
}

std::string config_to_json(const ExperimentConfig& config) {
  json strategies = json::array();
  for (StrategyKind s : config.strategies) strategies.push_back(strategy_name(s));
  const json j{
      {"n_qubits", config.n_qubits},
      {"vqc_depth", config.vqc_depth},
      {"target_depth", config.target_depth},
      {"strategies", std::move(strategies)},
      {"budget", config.budget},
      {"bootstrap", config.bootstrap},
      {"n_vqc", config.n_vqc},
      {"repeats", config.repeats},
      {"base_seed", config.base_seed},
      {"alpha", config.schedule.alpha},
      {"epochs", config.schedule.epochs},
      {"probe_mode", probe_mode_name(config.probe_mode)},
      {"emcm_refresh_every", config.emcm_refresh_every},
      {"qbc_squared", config.qbc_squared},
      {"phase_invariant_distance", config.phase_invariant_distance},
      {"record_wall_time", config.record_wall_time},
      {"threads", config.threads},
      {"out_dir", config.out_dir},
  };
  return j.dump(2) + "\n";
}

ExperimentConfig config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("config: top level must be an object");
  }
  static const std::set<std::string> known = {
      "n_qubits",   "vqc_depth",   "target_depth",
      "strategies", "budget",      "bootstrap",
      "n_vqc",      "repeats",     "base_seed",
      "alpha",      "epochs",      "probe_mode",
      "emcm_refresh_every",        "qbc_squared",
      "phase_invariant_distance",  "record_wall_time",
      "threads",    "out_dir",
  };
  for (const auto& [key, value] : j.items()) {
    if (known.find(key) == known.end()) {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }

  ExperimentConfig config;
  if (j.contains("n_qubits")) config.n_qubits = j["n_qubits"].get<std::size_t>();
  if (j.contains("vqc_depth")) {
    config.vqc_depth = j["vqc_depth"].get<std::size_t>();
  } else {
    config.vqc_depth = default_vqc_depth(config.n_qubits);
  }
  config.target_depth = j.contains("target_depth")
                            ? j["target_depth"].get<std::size_t>()
                            : config.vqc_depth;
  if (j.contains("strategies")) {
    config.strategies.clear();
    for (const auto& s : j["strategies"]) {
      config.strategies.push_back(strategy_from_name(s.get<std::string>()));
    }
  }
  if (j.contains("budget")) {
    config.budget = j["budget"].get<std::size_t>();
  } else {
    std::size_t pool_size = 1;
    for (std::size_t q = 0; q < config.n_qubits; ++q) pool_size *= 4;
    config.budget = pool_size;
  }
  if (j.contains("bootstrap")) config.bootstrap = j["bootstrap"].get<std::size_t>();
  if (j.contains("n_vqc")) config.n_vqc = j["n_vqc"].get<std::size_t>();
  if (j.contains("repeats")) config.repeats = j["repeats"].get<std::size_t>();
  if (j.contains("base_seed")) config.base_seed = j["base_seed"].get<std::uint64_t>();
  if (j.contains("alpha")) config.schedule.alpha = j["alpha"].get<double>();
  if (j.contains("epochs")) config.schedule.epochs = j["epochs"].get<std::size_t>();
  if (j.contains("probe_mode")) {
    config.probe_mode = probe_mode_from_name(j["probe_mode"].get<std::string>());
  }
  if (j.contains("emcm_refresh_every")) {
    config.emcm_refresh_every = j["emcm_refresh_every"].get<std::size_t>();
  }
  if (j.contains("qbc_squared")) config.qbc_squared = j["qbc_squared"].get<bool>();
  if (j.contains("phase_invariant_distance")) {
    config.phase_invariant_distance = j["phase_invariant_distance"].get<bool>();
  }
  if (j.contains("record_wall_time")) {
    config.record_wall_time = j["record_wall_time"].get<bool>();
  }
  if (j.contains("threads")) config.threads = j["threads"].get<std::size_t>();
  if (j.contains("out_dir")) config.out_dir = j["out_dir"].get<std::string>();
  validate_config(config);
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return config_from_json_text(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_experiment_outputs(const ExperimentConfig& config,
                              const ExperimentResult& result,
                              const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_text_file(dir / "records.csv", records_to_csv(result.records));
  write_text_file(dir / "summary.json", summary_to_json(result.summary));
  write_text_file(dir / "config.echo.json", config_to_json(config));
}

}  // namespace alqpt
