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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "alqpt/acquisition.hpp"
#include "alqpt/oracle.hpp"
#include "alqpt/probes.hpp"
#include "alqpt/seeding.hpp"
#include "brute_force.hpp"
#include "test_util.hpp"

using namespace alqpt;
using namespace alqpt_test;

namespace {

// sqrt(2 - sqrt(2)): committee spread of two orthogonal predictions.
constexpr double kOrthoSpread = 0.7653668647301795;

Committee one_qubit_committee(std::initializer_list<ParamVector> members) {
  Committee c;
  c.spec = AnsatzSpec{1, 0};
  c.members = members;
  return c;
}

Committee random_committee(const AnsatzSpec& spec, std::size_t size,
                           std::mt19937_64& rng) {
  Committee c;
  c.spec = spec;
  for (std::size_t k = 0; k < size; ++k) {
    c.members.push_back(init_params(spec, rng()));
  }
  return c;
}

double min_pairwise_distance(const ProbePool& probes,
                             const std::vector<std::size_t>& picked) {
  double dmin = 1e300;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    for (std::size_t j = i + 1; j < picked.size(); ++j) {
      dmin = std::min(dmin, state_distance(probes.states[picked[i]].amps,
                                           probes.states[picked[j]].amps));
    }
  }
  return dmin;
}

ALConfig small_config(const AnsatzSpec& spec, std::size_t budget) {
  ALConfig config;
  config.ansatz = spec;
  config.budget = budget;
  config.bootstrap = 1;
  config.n_vqc = 2;
  config.schedule = {0.05, 15};
  config.bootstrap_seed = 11;
  config.member_seeds = {21, 22, 23, 24, 25, 26};
  return config;
}

}  // namespace

TEST_CASE("QBC: identical members have zero spread") {
  const ParamVector p = {0.3, -0.8, 1.1};
  const Committee c = one_qubit_committee({p, p, p});
  CHECK(qbc_score(c, basis_state(1, 0)) <= 1e-14);
}

TEST_CASE("QBC: orthogonal two-member committee hits the closed form") {
  // Ry(0) keeps |0>, Ry(pi) maps it to |1>.
  const Committee c =
      one_qubit_committee({{0.0, 0.0, 0.0}, {0.0, kPi, 0.0}});
  CHECK(std::abs(qbc_score(c, basis_state(1, 0)) - kOrthoSpread) <= 1e-12);

  QbcOptions squared;
  squared.squared = true;
  CHECK(std::abs(qbc_score(c, basis_state(1, 0), squared) -
                 kOrthoSpread * kOrthoSpread) <= 1e-12);
}

TEST_CASE("QBC: a collapsed mean scores the sphere diameter") {
  // Ry(2pi) = -I, so the two predictions cancel exactly.
  const Committee c =
      one_qubit_committee({{0.0, 0.0, 0.0}, {0.0, 2 * kPi, 0.0}});
  CHECK(qbc_score(c, basis_state(1, 0)) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("QBC: phase-invariant distance ignores member phases") {
  // Rz(pi)|0> = e^{-i pi/2}|0>: same ray as |0>, different phase.
  const Committee c =
      one_qubit_committee({{0.0, 0.0, 0.0}, {kPi, 0.0, 0.0}});
  const double raw = qbc_score(c, basis_state(1, 0));
  CHECK(std::abs(raw - kOrthoSpread) <= 1e-12);  // |1 - e^{-i pi/4}| spread

  QbcOptions invariant;
  invariant.distance.phase_invariant = true;
  CHECK(qbc_score(c, basis_state(1, 0), invariant) <= 1e-12);
}

TEST_CASE("QBC requires at least two members") {
  const Committee c = one_qubit_committee({{0.0, 0.0, 0.0}});
  CHECK_THROWS_AS(qbc_score(c, basis_state(1, 0)), std::invalid_argument);
}

TEST_CASE("EMCM: consensus pseudo-labels give zero expected change") {
  std::mt19937_64 rng(41);
  const AnsatzSpec spec{2, 1};
  const ParamVector current = init_params(spec, rng());
  Committee ensemble;
  ensemble.spec = spec;
  ensemble.members = {current, current, current};
  CHECK(emcm_score(current, ensemble, random_state(2, rng)) <= 1e-12);
}

TEST_CASE("EMCM: single-member score equals the pseudo-label gradient norm") {
  std::mt19937_64 rng(42);
  const AnsatzSpec spec{1, 1};
  const ParamVector current = init_params(spec, rng());
  Committee ensemble;
  ensemble.spec = spec;
  ensemble.members = {init_params(spec, rng())};
  const StateVector probe = random_state(1, rng);

  const StateVector pseudo = forward(spec, ensemble.members[0], probe);
  const auto fd = grad_finite_diff(spec, current, {{probe, pseudo}}, 1e-5);
  double fd_norm = 0.0;
  for (double g : fd) fd_norm += g * g;
  fd_norm = std::sqrt(fd_norm);

  CHECK(std::abs(emcm_score(current, ensemble, probe) - fd_norm) <= 1e-6);
}

TEST_CASE("QBC and EMCM scores match brute-force reimplementations") {
  std::mt19937_64 rng(43);
  const ProbePool probes = generate_pool(2, ProbeMode::StandardIC);
  std::vector<std::size_t> unlabeled(probes.size());
  for (std::size_t i = 0; i < unlabeled.size(); ++i) unlabeled[i] = i;

  for (int config = 0; config < 5; ++config) {
    const AnsatzSpec spec{2, 1 + static_cast<std::size_t>(config % 2)};
    const Committee committee = random_committee(spec, 4, rng);
    const ParamVector current = committee.members[0];

    const auto qbc = qbc_scores(committee, probes, unlabeled);
    const auto emcm = emcm_scores(current, committee, probes, unlabeled);
    REQUIRE(qbc.size() == probes.size());
    REQUIRE(emcm.size() == probes.size());
    std::vector<double> bf_qbc;
    std::vector<double> bf_emcm;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      bf_qbc.push_back(bf_qbc_score(committee, probes.states[i]));
      bf_emcm.push_back(bf_emcm_score(current, committee, probes.states[i]));
      CHECK(std::abs(qbc[i] - bf_qbc[i]) <= 1e-12);
      CHECK(std::abs(emcm[i] - bf_emcm[i]) <= 1e-12);
    }
    CHECK(select_best_index(qbc, unlabeled) ==
          select_best_index(bf_qbc, unlabeled));
    CHECK(select_best_index(emcm, unlabeled) ==
          select_best_index(bf_emcm, unlabeled));
  }
}

TEST_CASE("GS picks the state farthest from the labeled set") {
  ProbePool probes = generate_pool(1, ProbeMode::StandardIC);
  PoolState pool_state;
  pool_state.labeled_indices = {0};           // |0>
  pool_state.unlabeled = {1, 2, 3};           // |1>, |+>, |+i>
  CHECK(gs_select(pool_state, probes) == 1);  // |1> at distance sqrt(2)

  // From |+>, the two basis states are equidistant; the lower index wins.
  pool_state.labeled_indices = {2};
  pool_state.unlabeled = {0, 1};
  CHECK(gs_select(pool_state, probes) == 0);
}

TEST_CASE("GS matches the brute-force farthest-point rule") {
  std::mt19937_64 rng(44);
  const ProbePool probes = generate_pool(2, ProbeMode::StandardIC);
  for (int trial = 0; trial < 20; ++trial) {
    PoolState pool_state;
    std::vector<std::size_t> all(probes.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t labeled_count = 1 + rng() % 6;
    pool_state.labeled_indices.assign(all.begin(), all.begin() + labeled_count);
    pool_state.unlabeled.assign(all.begin() + labeled_count, all.end());
    std::sort(pool_state.unlabeled.begin(), pool_state.unlabeled.end());
    CHECK(gs_select(pool_state, probes) ==
          bf_gs_select(probes, pool_state.labeled_indices,
                       pool_state.unlabeled));
  }
}

TEST_CASE("precomputed GS order equals stepwise selection") {
  const ProbePool probes = generate_pool(2, ProbeMode::StandardIC);
  for (std::size_t boot : {std::size_t{0}, std::size_t{5}, std::size_t{13}}) {
    const auto order = gs_selection_order(probes, {boot}, probes.size() - 1);
    PoolState pool_state;
    pool_state.labeled_indices = {boot};
    for (std::size_t i = 0; i < probes.size(); ++i) {
      if (i != boot) pool_state.unlabeled.push_back(i);
    }
    for (std::size_t step = 0; step < order.size(); ++step) {
      const std::size_t chosen = gs_select(pool_state, probes);
      CHECK(order[step] == chosen);
      pool_state.labeled_indices.push_back(chosen);
      pool_state.unlabeled.erase(
          std::find(pool_state.unlabeled.begin(), pool_state.unlabeled.end(),
                    chosen));
    }
  }
}

TEST_CASE("GS rejects empty sides") {
  const ProbePool probes = generate_pool(1, ProbeMode::StandardIC);
  PoolState no_labels;
  no_labels.unlabeled = {0, 1};
  CHECK_THROWS_AS(gs_select(no_labels, probes), std::invalid_argument);
  PoolState no_candidates;
  no_candidates.labeled_indices = {0};
  CHECK_THROWS_AS(gs_select(no_candidates, probes), std::invalid_argument);
}

TEST_CASE("random selection is seeded, uniform, and in range") {
  const ProbePool probes = generate_pool(2, ProbeMode::StandardIC);
  PoolState pool_state;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    pool_state.unlabeled.push_back(i);
  }

  std::mt19937_64 a(7);
  std::mt19937_64 b(7);
  for (int i = 0; i < 50; ++i) {
    CHECK(rand_select(pool_state, a) == rand_select(pool_state, b));
  }

  // 10^4 draws over 16 cells: expect 625 per cell, sigma ~ 24.2.
  std::mt19937_64 rng(8);
  std::vector<int> counts(probes.size(), 0);
  for (int i = 0; i < 10000; ++i) ++counts[rand_select(pool_state, rng)];
  for (int c : counts) {
    CHECK(c > 625 - 3 * 25);
    CHECK(c < 625 + 3 * 25);
  }

  PoolState singleton;
  singleton.unlabeled = {9};
  CHECK(rand_select(singleton, rng) == 9);
}

TEST_CASE("argmax keeps the lowest index on ties and ignores scale") {
  const std::vector<std::size_t> indices = {4, 7, 9, 12};
  CHECK(select_best_index({1.0, 3.0, 3.0, 0.5}, indices) == 7);
  CHECK(select_best_index({0.0, 0.0, 0.0, 0.0}, indices) == 4);

  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> scores;
    for (std::size_t i = 0; i < indices.size(); ++i) {
      scores.push_back(uniform_unit(rng));
    }
    std::vector<double> scaled = scores;
    for (double& s : scaled) s *= 7.25;
    CHECK(select_best_index(scores, indices) ==
          select_best_index(scaled, indices));
  }
  CHECK_THROWS_AS(select_best_index({}, {}), std::invalid_argument);
}

TEST_CASE("al_run with budget equal to bootstrap emits only step zero") {
  const ProbePool probes = generate_pool(1, ProbeMode::StandardIC);
  Oracle oracle = generate_target({1, 2, 3});
  ALConfig config = small_config({1, 1}, 1);
  const auto records =
      al_run({StrategyKind::RAND, 99}, oracle, probes, config);
  REQUIRE(records.size() == 1);
  CHECK(records[0].step == 0);
  CHECK(records[0].labels_used == 1);
  CHECK(oracle.query_count() == 1);
}

TEST_CASE("al_run labels the whole pool at full budget") {
  const ProbePool probes = generate_pool(1, ProbeMode::StandardIC);
  for (StrategyKind kind : {StrategyKind::RAND, StrategyKind::GS}) {
    Oracle oracle = generate_target({1, 2, 3});
    ALConfig config = small_config({1, 1}, probes.size());
    const auto records = al_run({kind, 5}, oracle, probes, config);
    CHECK(records.size() == probes.size());
    CHECK(oracle.query_count() == probes.size());
    CHECK(records.back().labels_used == probes.size());
  }
}

TEST_CASE("al_run: budget exactness and monotone label counts") {
  const ProbePool probes = generate_pool(2, ProbeMode::StandardIC);
  for (StrategyKind kind : {StrategyKind::QBC, StrategyKind::EMCM,
                            StrategyKind::GS, StrategyKind::RAND}) {
    Oracle oracle = generate_target({2, 3, 17});
    ALConfig config = small_config({2, 2}, 6);
    const auto records = al_run({kind, 31}, oracle, probes, config);
    REQUIRE(records.size() == 6);
    CHECK(oracle.query_count() == 6);
    for (std::size_t i = 0; i < records.size(); ++i) {
      CHECK(records[i].step == i);
      CHECK(records[i].labels_used == i + 1);
      CHECK(records[i].loss >= 0.0);
      CHECK(records[i].loss <= 4.0);
      CHECK(records[i].similarity >= 0.0);
      CHECK(records[i].similarity <= 1.0);
      CHECK(records[i].wall_time_s == 0.0);  // timing is off by default
    }
  }
}

TEST_CASE("al_run is deterministic and strategies share the bootstrap") {
  const ProbePool probes = generate_pool(2, ProbeMode::StandardIC);
  ALConfig config = small_config({2, 2}, 5);

  Oracle o1 = generate_target({2, 3, 17});
  Oracle o2 = generate_target({2, 3, 17});
  const auto a = al_run({StrategyKind::QBC, 31}, o1, probes, config);
  const auto b = al_run({StrategyKind::QBC, 31}, o2, probes, config);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].loss == b[i].loss);  // bitwise reproducibility
    CHECK(a[i].similarity == b[i].similarity);
  }

  // The bootstrap point depends only on shared seeds, not the strategy.
  Oracle o3 = generate_target({2, 3, 17});
  const auto c = al_run({StrategyKind::RAND, 77}, o3, probes, config);
  CHECK(a[0].loss == c[0].loss);
  CHECK(a[0].similarity == c[0].similarity);
}

TEST_CASE("al_run validates its configuration") {
  const ProbePool probes = generate_pool(1, ProbeMode::StandardIC);
  Oracle oracle = generate_target({1, 1, 0});

  ALConfig over = small_config({1, 1}, probes.size() + 1);
  CHECK_THROWS_AS(al_run({StrategyKind::RAND, 0}, oracle, probes, over),
                  std::invalid_argument);

  ALConfig no_boot = small_config({1, 1}, 3);
  no_boot.bootstrap = 0;
  CHECK_THROWS_AS(al_run({StrategyKind::RAND, 0}, oracle, probes, no_boot),
                  std::invalid_argument);

  ALConfig thin = small_config({1, 1}, 3);
  thin.n_vqc = 1;
  CHECK_THROWS_AS(al_run({StrategyKind::QBC, 0}, oracle, probes, thin),
                  std::invalid_argument);

  ALConfig no_seeds = small_config({1, 1}, 3);
  no_seeds.member_seeds = {1};
  CHECK_THROWS_AS(al_run({StrategyKind::QBC, 0}, oracle, probes, no_seeds),
                  std::invalid_argument);

  ALConfig mismatched = small_config({2, 1}, 3);
  CHECK_THROWS_AS(al_run({StrategyKind::RAND, 0}, oracle, probes, mismatched),
                  std::invalid_argument);
}

TEST_CASE("GS spreads its labels wider than random selection") {
  const ProbePool probes = generate_pool(2, ProbeMode::StandardIC);
  double gs_total = 0.0;
  double rand_total = 0.0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng(derive_seed(seed, SeedPurpose::kStrategy, 0, 0));
    PoolState pool_state;
    for (std::size_t i = 0; i < probes.size(); ++i) {
      pool_state.unlabeled.push_back(i);
    }
    const std::size_t boot = rand_select(pool_state, rng);

    const auto order = gs_selection_order(probes, {boot}, 5);
    std::vector<std::size_t> gs_picked = {boot};
    gs_picked.insert(gs_picked.end(), order.begin(), order.end());
    gs_total += min_pairwise_distance(probes, gs_picked);

    std::vector<std::size_t> rand_picked = {boot};
    PoolState rand_state = pool_state;
    rand_state.unlabeled.erase(std::find(rand_state.unlabeled.begin(),
                                         rand_state.unlabeled.end(), boot));
    for (int i = 0; i < 5; ++i) {
      const std::size_t pick = rand_select(rand_state, rng);
      rand_picked.push_back(pick);
      rand_state.unlabeled.erase(std::find(rand_state.unlabeled.begin(),
                                           rand_state.unlabeled.end(), pick));
    }
    rand_total += min_pairwise_distance(probes, rand_picked);
  }
  CHECK(gs_total / 30.0 >= rand_total / 30.0);
}

TEST_CASE("strategy names round trip") {
  for (StrategyKind kind : {StrategyKind::QBC, StrategyKind::EMCM,
                            StrategyKind::GS, StrategyKind::RAND}) {
    CHECK(strategy_from_name(strategy_name(kind)) == kind);
  }
  CHECK_THROWS_AS(strategy_from_name("QBCX"), std::invalid_argument);
}
