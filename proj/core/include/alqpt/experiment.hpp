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

#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alqpt/acquisition.hpp"

namespace alqpt {

/// Default VQC depth per qubit count (n = 2..7; n = 1 is a pragmatic
/// extension for smoke tests).
std::size_t default_vqc_depth(std::size_t num_qubits);

/// Full description of one experiment. Every field has a working default;
/// a config file overrides by key, and omitted depths fall back to
/// default_vqc_depth / vqc_depth.
struct ExperimentConfig {
  std::size_t n_qubits = 2;
  std::size_t vqc_depth = 3;
  std::size_t target_depth = 3;
  std::vector<StrategyKind> strategies = {StrategyKind::QBC, StrategyKind::EMCM,
                                          StrategyKind::GS, StrategyKind::RAND};
  std::size_t budget = 16;
  std::size_t bootstrap = 1;
  std::size_t n_vqc = 6;
  std::size_t repeats = 30;
  std::uint64_t base_seed = 20250821;
  TrainSchedule schedule;
  ProbeMode probe_mode = ProbeMode::StandardIC;
  std::size_t emcm_refresh_every = 1;
  bool qbc_squared = false;
  bool phase_invariant_distance = false;
  /// Off by default so records.csv is byte-identical across runs.
  bool record_wall_time = false;
  std::size_t threads = 0;  // 0 = hardware concurrency
  std::string out_dir = "out";
};

/// Throws invalid_argument with a field-specific message on any bad value.
void validate_config(const ExperimentConfig& config);

/// One CSV row: a StepRecord tagged with its (strategy, repeat) run.
struct RunRecord {
  StrategyKind strategy = StrategyKind::RAND;
  std::size_t repeat = 0;
  std::size_t step = 0;
  std::size_t labels_used = 0;
  double loss = 0.0;
  double similarity = 0.0;
  double similarity_phase_aligned = 0.0;
  double wall_time_s = 0.0;
};

/// Mean/std of similarity over repeats at one (strategy, labels_used)
/// point, plus the improvement ratio against RAND at the same point when
/// RAND is part of the experiment and its mean is large enough to divide by.
struct SummaryRow {
  StrategyKind strategy = StrategyKind::RAND;
  std::size_t labels_used = 0;
  double mean_similarity = 0.0;
  double std_similarity = 0.0;  // population standard deviation
  double mean_loss = 0.0;
  std::optional<double> improvement;
};

struct ExperimentResult {
  std::vector<RunRecord> records;  // ordered by (strategy, repeat, step)
  std::vector<SummaryRow> summary;
};

/// Runs every (strategy, repeat) pair. Within a repeat all strategies face
/// the same target circuit, the same bootstrap choice, and the same member
/// initializations (seeds derived from base_seed), isolating the
/// acquisition rule as the only difference. Repeats may execute on a
/// thread pool; records are ordered afterwards, so the output is
/// deterministic regardless of scheduling.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// CSV with the fixed header
/// strategy,repeat,step,labels_used,loss,similarity,similarity_phase_aligned,wall_time_s
/// LF line endings, '%.12g' reals (wall time '%.6f').
std::string records_to_csv(const std::vector<RunRecord>& records);

std::vector<SummaryRow> build_summary(const ExperimentConfig& config,
                                      const std::vector<RunRecord>& records);

std::string summary_to_json(const std::vector<SummaryRow>& summary);

/// Resolved configuration echo (provenance record).
std::string config_to_json(const ExperimentConfig& config);

/// Strict parse: unknown keys are errors, omitted keys keep defaults,
/// omitted vqc_depth comes from default_vqc_depth(n_qubits) and omitted
/// target_depth copies vqc_depth.
ExperimentConfig config_from_json_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

/// Writes records.csv, summary.json, and config.echo.json under `out_dir`
/// (created if missing).
void write_experiment_outputs(const ExperimentConfig& config,
                              const ExperimentResult& result,
                              const std::string& out_dir);

}  // namespace alqpt
