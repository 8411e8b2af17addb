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

#include "alqpt/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include "alqpt/seeding.hpp"

namespace alqpt {

std::size_t default_vqc_depth(std::size_t num_qubits) {
  switch (num_qubits) {
    case 1: return 1;
    case 2: return 3;
    case 3: return 5;
    case 4: return 7;
    case 5: return 8;
    case 6: return 8;
    case 7: return 8;
    default:
      throw std::invalid_argument("default_vqc_depth: qubit count out of range");
  }
}

void validate_config(const ExperimentConfig& config) {
  if (config.n_qubits < 1 || config.n_qubits > 7) {
    throw std::invalid_argument("config: n_qubits must be in [1, 7]");
  }
  std::size_t pool_size = 1;
  for (std::size_t q = 0; q < config.n_qubits; ++q) pool_size *= 4;
  if (config.budget < 1 || config.budget > pool_size) {
    throw std::invalid_argument("config: budget must be in [1, 4^n]");
  }
  if (config.bootstrap < 1 || config.bootstrap > config.budget) {
    throw std::invalid_argument("config: bootstrap must be in [1, budget]");
  }
  if (config.strategies.empty()) {
    throw std::invalid_argument("config: no strategies given");
  }
  for (std::size_t i = 0; i < config.strategies.size(); ++i) {
    for (std::size_t j = i + 1; j < config.strategies.size(); ++j) {
      if (config.strategies[i] == config.strategies[j]) {
        throw std::invalid_argument("config: duplicate strategy");
      }
    }
  }
  if (config.n_vqc < 2) {
    throw std::invalid_argument("config: n_vqc must be >= 2");
  }
  if (config.repeats < 1) {
    throw std::invalid_argument("config: repeats must be >= 1");
  }
  if (!(config.schedule.alpha > 0.0)) {
    throw std::invalid_argument("config: alpha must be > 0");
  }
  if (config.emcm_refresh_every < 1) {
    throw std::invalid_argument("config: emcm_refresh_every must be >= 1");
  }
}

namespace {

std::vector<StepRecord> run_one(const ExperimentConfig& config,
                                StrategyKind kind, std::size_t repeat,
                                const ProbePool& probes) {
  TargetSpec target;
  target.num_qubits = config.n_qubits;
  target.depth = config.target_depth;
  target.seed = derive_seed(config.base_seed, SeedPurpose::kTarget, repeat);
  Oracle oracle = generate_target(target);

  ALConfig al;
  al.ansatz = AnsatzSpec{config.n_qubits, config.vqc_depth};
  al.budget = config.budget;
  al.bootstrap = config.bootstrap;
  al.n_vqc = config.n_vqc;
  al.schedule = config.schedule;
  al.bootstrap_seed =
      derive_seed(config.base_seed, SeedPurpose::kBootstrap, repeat);
  al.member_seeds.resize(config.n_vqc);
  for (std::size_t k = 0; k < config.n_vqc; ++k) {
    al.member_seeds[k] =
        derive_seed(config.base_seed, SeedPurpose::kMember, repeat, k);
  }
  al.emcm_refresh_every = config.emcm_refresh_every;
  al.qbc.squared = config.qbc_squared;
  al.qbc.distance.phase_invariant = config.phase_invariant_distance;
  al.gs_distance.phase_invariant = config.phase_invariant_distance;
  al.record_wall_time = config.record_wall_time;

  Strategy strategy;
  strategy.kind = kind;
  strategy.rng_seed = derive_seed(config.base_seed, SeedPurpose::kStrategy,
                                  repeat, static_cast<std::uint64_t>(kind));

  std::vector<StepRecord> steps = al_run(strategy, oracle, probes, al);
  if (oracle.query_count() != config.budget) {
    throw std::logic_error("run_one: oracle query count != budget");
  }
  return steps;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  const ProbePool probes = generate_pool(config.n_qubits, config.probe_mode);

  const std::size_t task_count = config.strategies.size() * config.repeats;
  std::vector<std::vector<StepRecord>> results(task_count);
  std::vector<std::string> failures(task_count);

  const auto task_body = [&](std::size_t task) {
    const std::size_t si = task / config.repeats;
    const std::size_t repeat = task % config.repeats;
    try {
      results[task] = run_one(config, config.strategies[si], repeat, probes);
    } catch (const std::exception& e) {
      failures[task] = std::string("strategy ") +
                       strategy_name(config.strategies[si]) + " repeat " +
                       std::to_string(repeat) + ": " + e.what();
    }
  };

  std::size_t workers = config.threads;
  if (workers == 0) {
    workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
  }
  workers = std::min(workers, task_count);

  if (workers <= 1) {
    for (std::size_t task = 0; task < task_count; ++task) task_body(task);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t task = next.fetch_add(1); task < task_count;
             task = next.fetch_add(1)) {
          task_body(task);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  for (const std::string& f : failures) {
    if (!f.empty()) throw std::runtime_error("run_experiment: " + f);
  }

  // Single-writer ordering: rows sorted by (strategy config position,
  // repeat, step) no matter how tasks were scheduled.
  ExperimentResult out;
  for (std::size_t task = 0; task < task_count; ++task) {
    const std::size_t si = task / config.repeats;
    const std::size_t repeat = task % config.repeats;
    for (const StepRecord& s : results[task]) {
      RunRecord r;
      r.strategy = config.strategies[si];
      r.repeat = repeat;
      r.step = s.step;
      r.labels_used = s.labels_used;
      r.loss = s.loss;
      r.similarity = s.similarity;
      r.similarity_phase_aligned = s.similarity_phase_aligned;
      r.wall_time_s = s.wall_time_s;
      out.records.push_back(r);
    }
  }
  out.summary = build_summary(config, out.records);
  return out;
}

std::string records_to_csv(const std::vector<RunRecord>& records) {
  std::string out =
      "strategy,repeat,step,labels_used,loss,similarity,"
      "similarity_phase_aligned,wall_time_s\n";
  char buf[160];
  for (const RunRecord& r : records) {
    std::snprintf(buf, sizeof(buf), "%s,%zu,%zu,%zu,%.12g,%.12g,%.12g,%.6f\n",
                  strategy_name(r.strategy).c_str(), r.repeat, r.step,
                  r.labels_used, r.loss, r.similarity,
                  r.similarity_phase_aligned, r.wall_time_s);
    out += buf;
  }
  return out;
}

std::vector<SummaryRow> build_summary(const ExperimentConfig& config,
                                      const std::vector<RunRecord>& records) {
  // (strategy, labels_used) -> similarity and loss samples across repeats.
  struct Cell {
    std::vector<double> sims;
    std::vector<double> losses;
  };
  std::map<std::pair<std::size_t, std::size_t>, Cell> cells;
  auto strategy_pos = [&](StrategyKind kind) {
    for (std::size_t i = 0; i < config.strategies.size(); ++i) {
      if (config.strategies[i] == kind) return i;
    }
    throw std::logic_error("build_summary: record with unknown strategy");
  };
  for (const RunRecord& r : records) {
    Cell& c = cells[{strategy_pos(r.strategy), r.labels_used}];
    c.sims.push_back(r.similarity);
    c.losses.push_back(r.loss);
  }

  const auto mean_of = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };

  std::vector<SummaryRow> summary;
  summary.reserve(cells.size());
  for (const auto& [key, cell] : cells) {
    SummaryRow row;
    row.strategy = config.strategies[key.first];
    row.labels_used = key.second;
    row.mean_similarity = mean_of(cell.sims);
    double var = 0.0;
    for (double x : cell.sims) {
      var += (x - row.mean_similarity) * (x - row.mean_similarity);
    }
    row.std_similarity = std::sqrt(var / static_cast<double>(cell.sims.size()));
    row.mean_loss = mean_of(cell.losses);
    summary.push_back(row);
  }

  // Improvement against RAND at matched labels_used, when RAND ran.
  std::map<std::size_t, double> rand_mean;
  for (const SummaryRow& row : summary) {
    if (row.strategy == StrategyKind::RAND) {
      rand_mean[row.labels_used] = row.mean_similarity;
    }
  }
  if (!rand_mean.empty()) {
    for (SummaryRow& row : summary) {
      const auto it = rand_mean.find(row.labels_used);
      if (it != rand_mean.end() && it->second > 1e-12) {
        row.improvement = row.mean_similarity / it->second;
      }
    }
  }
  return summary;
}

}  // namespace alqpt
