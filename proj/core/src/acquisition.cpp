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

#include "alqpt/acquisition.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "alqpt/metrics.hpp"
#include "alqpt/seeding.hpp"

namespace alqpt {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

double metric(const cvector_t& a, const cvector_t& b,
              const DistanceOptions& options) {
  return options.phase_invariant ? state_distance_phase_invariant(a, b)
                                 : state_distance(a, b);
}

std::vector<Circuit> member_circuits(const Committee& committee) {
  std::vector<Circuit> circuits;
  circuits.reserve(committee.members.size());
  for (const ParamVector& p : committee.members) {
    circuits.push_back(build_ansatz(committee.spec, p));
  }
  return circuits;
}

double qbc_score_from_preds(const std::vector<cvector_t>& preds,
                            const QbcOptions& options, cvector_t& mean) {
  const std::size_t count = preds.size();
  const std::size_t dim = preds[0].size();
  mean.assign(dim, complex_t{});
  for (const cvector_t& p : preds) {
    for (std::size_t i = 0; i < dim; ++i) mean[i] += p[i];
  }
  const double inv = 1.0 / static_cast<double>(count);
  for (std::size_t i = 0; i < dim; ++i) mean[i] *= inv;
  const double mean_norm = norm(mean);
  if (mean_norm < 1e-12) return 2.0;  // perfect antipodal cancellation
  for (std::size_t i = 0; i < dim; ++i) mean[i] /= mean_norm;
  double acc = 0.0;
  for (const cvector_t& p : preds) {
    const double d = metric(p, mean, options.distance);
    acc += options.squared ? d * d : d;
  }
  return acc * inv;
}

}  // namespace

const std::string& strategy_name(StrategyKind kind) {
  static const std::string names[] = {"QBC", "EMCM", "GS", "RAND"};
  return names[static_cast<std::size_t>(kind)];
}

StrategyKind strategy_from_name(const std::string& name) {
  if (name == "QBC") return StrategyKind::QBC;
  if (name == "EMCM") return StrategyKind::EMCM;
  if (name == "GS") return StrategyKind::GS;
  if (name == "RAND") return StrategyKind::RAND;
  throw std::invalid_argument("unknown strategy: " + name);
}

double qbc_score(const Committee& committee, const StateVector& probe,
                 const QbcOptions& options) {
  if (committee.members.size() < 2) {
    throw std::invalid_argument("qbc_score: committee needs >= 2 members");
  }
  std::vector<cvector_t> preds;
  preds.reserve(committee.members.size());
  for (const ParamVector& p : committee.members) {
    preds.push_back(forward(committee.spec, p, probe).amps);
  }
  cvector_t mean;
  return qbc_score_from_preds(preds, options, mean);
}

double emcm_score(const ParamVector& current, const Committee& ensemble,
                  const StateVector& probe) {
  if (ensemble.members.empty()) {
    throw std::invalid_argument("emcm_score: empty ensemble");
  }
  const std::vector<std::size_t> one{0};
  ProbePool single;
  single.num_qubits = probe.num_qubits;
  single.states = {probe};
  return emcm_scores(current, ensemble, single, one)[0];
}

std::vector<double> qbc_scores(const Committee& committee,
                               const ProbePool& probes,
                               const std::vector<std::size_t>& unlabeled,
                               const QbcOptions& options) {
  if (committee.members.size() < 2) {
    throw std::invalid_argument("qbc_scores: committee needs >= 2 members");
  }
  const std::vector<Circuit> circuits = member_circuits(committee);
  const std::size_t count = committee.members.size();
  std::vector<cvector_t> preds(count);
  cvector_t mean;
  std::vector<double> scores;
  scores.reserve(unlabeled.size());
  for (std::size_t idx : unlabeled) {
    for (std::size_t k = 0; k < count; ++k) {
      preds[k] = probes.states[idx].amps;
      apply_circuit_inplace(preds[k], circuits[k]);
    }
    scores.push_back(qbc_score_from_preds(preds, options, mean));
  }
  return scores;
}

std::vector<double> emcm_scores(const ParamVector& current,
                                const Committee& ensemble,
                                const ProbePool& probes,
                                const std::vector<std::size_t>& unlabeled) {
  if (ensemble.members.empty()) {
    throw std::invalid_argument("emcm_scores: empty ensemble");
  }
  if (current.size() != param_count(ensemble.spec)) {
    throw std::invalid_argument("emcm_scores: parameter count mismatch");
  }
  const std::vector<Circuit> circuits = member_circuits(ensemble);
  const std::size_t count = ensemble.members.size();

  GradWorkspace ws(ensemble.spec);
  ws.set_params(current);
  std::vector<double> acc(ws.params());
  cvector_t pred;
  std::vector<double> scores;
  scores.reserve(unlabeled.size());
  for (std::size_t idx : unlabeled) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t k = 0; k < count; ++k) {
      pred = probes.states[idx].amps;
      apply_circuit_inplace(pred, circuits[k]);
      ws.accumulate_shift_overlaps(probes.states[idx].amps, pred, acc.data());
    }
    // Each member contributes -2 * dO_k/dtheta; the average over members and
    // the shift-rule denominator 2*sqrt(2) reduce to this single scale.
    double norm_sq = 0.0;
    for (double a : acc) norm_sq += a * a;
    scores.push_back(std::sqrt(norm_sq) /
                     (static_cast<double>(count) * kSqrt2));
  }
  return scores;
}

std::size_t gs_select(const PoolState& pool_state, const ProbePool& probes,
                      const DistanceOptions& options) {
  if (pool_state.labeled_indices.empty()) {
    throw std::invalid_argument("gs_select: labeled set is empty");
  }
  if (pool_state.unlabeled.empty()) {
    throw std::invalid_argument("gs_select: unlabeled set is empty");
  }
  std::vector<double> scores;
  scores.reserve(pool_state.unlabeled.size());
  for (std::size_t idx : pool_state.unlabeled) {
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t lab : pool_state.labeled_indices) {
      dmin = std::min(dmin, metric(probes.states[idx].amps,
                                   probes.states[lab].amps, options));
    }
    scores.push_back(dmin);
  }
  return select_best_index(scores, pool_state.unlabeled);
}

std::vector<std::size_t> gs_selection_order(
    const ProbePool& probes, std::vector<std::size_t> labeled_indices,
    std::size_t count, const DistanceOptions& options) {
  if (labeled_indices.empty()) {
    throw std::invalid_argument("gs_selection_order: labeled set is empty");
  }
  const std::size_t pool_size = probes.size();
  std::vector<bool> taken(pool_size, false);
  for (std::size_t lab : labeled_indices) taken[lab] = true;

  // Farthest-point traversal: keep each candidate's distance to the nearest
  // selected-or-labeled state and refresh it as points are added.
  std::vector<double> dmin(pool_size, std::numeric_limits<double>::infinity());
  for (std::size_t idx = 0; idx < pool_size; ++idx) {
    if (taken[idx]) continue;
    for (std::size_t lab : labeled_indices) {
      dmin[idx] = std::min(dmin[idx], metric(probes.states[idx].amps,
                                             probes.states[lab].amps, options));
    }
  }

  std::vector<std::size_t> order;
  order.reserve(count);
  for (std::size_t pick = 0; pick < count; ++pick) {
    std::size_t best = pool_size;
    for (std::size_t idx = 0; idx < pool_size; ++idx) {
      if (taken[idx]) continue;
      if (best == pool_size || dmin[idx] > dmin[best]) best = idx;
    }
    if (best == pool_size) {
      throw std::invalid_argument("gs_selection_order: pool exhausted");
    }
    order.push_back(best);
    taken[best] = true;
    for (std::size_t idx = 0; idx < pool_size; ++idx) {
      if (taken[idx]) continue;
      dmin[idx] = std::min(dmin[idx], metric(probes.states[idx].amps,
                                             probes.states[best].amps, options));
    }
  }
  return order;
}

std::size_t rand_select(const PoolState& pool_state, std::mt19937_64& rng) {
  if (pool_state.unlabeled.empty()) {
    throw std::invalid_argument("rand_select: unlabeled set is empty");
  }
  return pool_state.unlabeled[uniform_index(rng, pool_state.unlabeled.size())];
}

std::size_t select_best_index(const std::vector<double>& scores,
                              const std::vector<std::size_t>& indices) {
  if (scores.empty() || scores.size() != indices.size()) {
    throw std::invalid_argument("select_best_index: bad score table");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return indices[best];
}

namespace {

struct RunContext {
  const ProbePool& probes;
  Oracle& oracle;
  PoolState pool;

  void label(std::size_t idx) {
    auto it = std::find(pool.unlabeled.begin(), pool.unlabeled.end(), idx);
    if (it == pool.unlabeled.end()) {
      throw std::logic_error("al_run: index already labeled");
    }
    pool.unlabeled.erase(it);
    pool.labeled_indices.push_back(idx);
    pool.labeled.push_back(
        LabeledPair{probes.states[idx], oracle.query(probes.states[idx])});
  }
};

}  // namespace

std::vector<StepRecord> al_run(const Strategy& strategy, Oracle& oracle,
                               const ProbePool& probes, const ALConfig& config) {
  using clock = std::chrono::steady_clock;

  const bool model_based = strategy.kind == StrategyKind::QBC ||
                           strategy.kind == StrategyKind::EMCM;
  const std::size_t member_count = model_based ? config.n_vqc : 1;
  if (config.bootstrap < 1) {
    throw std::invalid_argument("al_run: bootstrap must be >= 1");
  }
  if (config.budget < config.bootstrap) {
    throw std::invalid_argument("al_run: budget below bootstrap");
  }
  if (config.budget > probes.size()) {
    throw std::invalid_argument("al_run: budget exceeds pool size");
  }
  if (model_based && config.n_vqc < 2) {
    throw std::invalid_argument("al_run: committee needs >= 2 members");
  }
  if (config.member_seeds.size() < member_count) {
    throw std::invalid_argument("al_run: not enough member seeds");
  }
  if (config.ansatz.num_qubits != probes.num_qubits ||
      probes.num_qubits != oracle.target_circuit().num_qubits) {
    throw std::invalid_argument("al_run: qubit count mismatch");
  }

  const auto t_start = clock::now();
  RunContext ctx{probes, oracle, PoolState{}};
  ctx.pool.unlabeled.resize(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) ctx.pool.unlabeled[i] = i;

  std::mt19937_64 boot_rng(config.bootstrap_seed);
  for (std::size_t b = 0; b < config.bootstrap; ++b) {
    ctx.label(rand_select(ctx.pool, boot_rng));
  }

  Committee committee;
  committee.spec = config.ansatz;
  committee.members.reserve(member_count);
  for (std::size_t k = 0; k < member_count; ++k) {
    committee.members.push_back(
        init_params(config.ansatz, config.member_seeds[k]));
  }

  GradWorkspace ws(config.ansatz);
  for (std::size_t k = 0; k < member_count; ++k) {
    train_ws(ws, committee.members[k], ctx.pool.labeled, config.schedule);
  }

  const UnitaryMatrix target_u = assemble_unitary(oracle.target_circuit());
  std::mt19937_64 strategy_rng(strategy.rng_seed);

  std::vector<StepRecord> records;
  records.reserve(config.budget - config.bootstrap + 1);
  const auto emit = [&](std::size_t step, const clock::time_point& t0) {
    StepRecord r;
    r.step = step;
    r.labels_used = ctx.pool.labeled.size();
    r.loss = loss(config.ansatz, committee.members[0], ctx.pool.labeled);
    const UnitaryMatrix model_u =
        assemble_unitary(build_ansatz(config.ansatz, committee.members[0]));
    r.similarity = similarity(target_u, model_u);
    r.similarity_phase_aligned = phase_aligned_similarity(target_u, model_u);
    if (config.record_wall_time) {
      r.wall_time_s = std::chrono::duration<double>(clock::now() - t0).count();
    }
    records.push_back(r);
  };
  emit(0, t_start);

  std::vector<std::size_t> gs_order;
  if (strategy.kind == StrategyKind::GS) {
    gs_order = gs_selection_order(probes, ctx.pool.labeled_indices,
                                  config.budget - config.bootstrap,
                                  config.gs_distance);
  }

  for (std::size_t step = 1; step <= config.budget - config.bootstrap; ++step) {
    const auto t0 = clock::now();
    std::size_t chosen = 0;
    switch (strategy.kind) {
      case StrategyKind::QBC:
        chosen = select_best_index(
            qbc_scores(committee, probes, ctx.pool.unlabeled, config.qbc),
            ctx.pool.unlabeled);
        break;
      case StrategyKind::EMCM:
        chosen = select_best_index(
            emcm_scores(committee.members[0], committee, probes,
                        ctx.pool.unlabeled),
            ctx.pool.unlabeled);
        break;
      case StrategyKind::GS:
        chosen = gs_order[step - 1];
        break;
      case StrategyKind::RAND:
        chosen = rand_select(ctx.pool, strategy_rng);
        break;
    }
    ctx.label(chosen);
    for (std::size_t k = 0; k < member_count; ++k) {
      const bool refresh =
          k == 0 || strategy.kind != StrategyKind::EMCM ||
          config.emcm_refresh_every <= 1 ||
          step % config.emcm_refresh_every == 0;
      if (refresh) {
        train_ws(ws, committee.members[k], ctx.pool.labeled, config.schedule);
      }
    }
    emit(step, t0);
  }
  return records;
}

}  // namespace alqpt
