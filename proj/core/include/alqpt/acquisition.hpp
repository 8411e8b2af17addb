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
#include <random>
#include <string>
#include <vector>

#include "alqpt/ansatz.hpp"
#include "alqpt/oracle.hpp"
#include "alqpt/probes.hpp"

namespace alqpt {

enum class StrategyKind { QBC, EMCM, GS, RAND };

const std::string& strategy_name(StrategyKind kind);
StrategyKind strategy_from_name(const std::string& name);

/// Acquisition strategy plus the only randomness it may consume.
struct Strategy {
  StrategyKind kind = StrategyKind::RAND;
  std::uint64_t rng_seed = 0;
};

/// Independently initialized models trained on the same labeled pool.
struct Committee {
  AnsatzSpec spec;
  std::vector<ParamVector> members;
};

/// Bookkeeping for D_u / D_l. `unlabeled` and `labeled_indices` stay sorted
/// ascending and partition the full pool index set; labeled[i] is the pair
/// for labeled_indices[i].
struct PoolState {
  std::vector<std::size_t> unlabeled;
  std::vector<std::size_t> labeled_indices;
  std::vector<LabeledPair> labeled;
};

/// Distance options shared by QBC and GS scoring. The formulas are written
/// on raw amplitude vectors; phase_invariant is a diagnostic variant.
struct DistanceOptions {
  bool phase_invariant = false;
};

struct QbcOptions {
  bool squared = false;  // mean squared distances instead of mean distances
  DistanceOptions distance;
};

/// Committee disagreement on one probe: the members' predictions, their
/// normalized mean state, and the mean (per-member) distance to that mean.
/// A committee that cancels perfectly (mean norm < 1e-12) scores the
/// maximum possible disagreement, 2.
double qbc_score(const Committee& committee, const StateVector& probe,
                 const QbcOptions& options = {});

/// Norm of the ensemble-averaged loss gradient at `current` when `probe`
/// is pseudo-labeled by each ensemble member's own prediction. Accepts a
/// single-member ensemble (used by tests); al_run always passes the full
/// committee, whose member 0 is `current` itself.
double emcm_score(const ParamVector& current, const Committee& ensemble,
                  const StateVector& probe);

/// argmax over unlabeled of min over labeled of the probe distance;
/// ties broken by lowest pool index. Model-free.
std::size_t gs_select(const PoolState& pool_state, const ProbePool& probes,
                      const DistanceOptions& options = {});

/// The full greedy order for `count` selections starting from the given
/// labeled set. Labels never enter the rule, so precomputing the order is
/// equivalent to re-running gs_select after each query.
std::vector<std::size_t> gs_selection_order(
    const ProbePool& probes, std::vector<std::size_t> labeled_indices,
    std::size_t count, const DistanceOptions& options = {});

/// Uniform choice among unlabeled indices, consuming the strategy rng.
std::size_t rand_select(const PoolState& pool_state, std::mt19937_64& rng);

/// Index (from `indices`) of the maximum score; ties resolve to the lowest
/// pool index. Scores and indices are parallel arrays.
std::size_t select_best_index(const std::vector<double>& scores,
                              const std::vector<std::size_t>& indices);

/// Scores for every index in `unlabeled`, in order. These are the hooks
/// al_run selects through; exposed so tests can rescale and reselect.
std::vector<double> qbc_scores(const Committee& committee,
                               const ProbePool& probes,
                               const std::vector<std::size_t>& unlabeled,
                               const QbcOptions& options = {});
std::vector<double> emcm_scores(const ParamVector& current,
                                const Committee& ensemble,
                                const ProbePool& probes,
                                const std::vector<std::size_t>& unlabeled);

struct ALConfig {
  AnsatzSpec ansatz;          // must match the probe pool's qubit count
  std::size_t budget = 0;     // total labels including bootstrap
  std::size_t bootstrap = 1;  // initial random labels, >= 1
  std::size_t n_vqc = 6;      // committee/ensemble size for QBC and EMCM
  TrainSchedule schedule;
  std::uint64_t bootstrap_seed = 0;
  /// Parameter-init seed per member; shared across strategies by the
  /// harness so every strategy starts from the identical member 0.
  std::vector<std::uint64_t> member_seeds;
  /// Retrain EMCM's non-base ensemble members every this many steps
  /// (1 = every step). The base model always retrains.
  std::size_t emcm_refresh_every = 1;
  QbcOptions qbc;
  DistanceOptions gs_distance;
  bool record_wall_time = false;  // default off so records are byte-stable
};

/// One measured point of a run. labels_used counts all oracle queries so
/// far, bootstrap included; step 0 is the bootstrap point.
struct StepRecord {
  std::size_t step = 0;
  std::size_t labels_used = 0;
  double loss = 0.0;
  double similarity = 0.0;
  double similarity_phase_aligned = 0.0;
  double wall_time_s = 0.0;
};

/// The Evaluate-Select-Query-Add-Update cycle for one strategy on one
/// oracle. Bootstraps `bootstrap` random labels, trains, then labels one
/// state per step until `budget` oracle queries are spent, retraining the
/// member set each step (warm start). Member 0 is the reported model;
/// loss is member 0's loss on the current labeled pool and similarity
/// compares member 0 against the oracle's circuit.
std::vector<StepRecord> al_run(const Strategy& strategy, Oracle& oracle,
                               const ProbePool& probes, const ALConfig& config);

}  // namespace alqpt
