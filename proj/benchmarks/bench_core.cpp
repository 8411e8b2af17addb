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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "alqpt/acquisition.hpp"
#include "alqpt/ansatz.hpp"
#include "alqpt/circuit.hpp"
#include "alqpt/oracle.hpp"
#include "alqpt/probes.hpp"
#include "alqpt/state.hpp"

namespace {

using namespace alqpt;

StateVector bench_state(std::size_t n) {
  std::mt19937_64 rng(7);
  StateVector s = basis_state(n, 0);
  double norm_sq = 0.0;
  for (auto& a : s.amps) {
    a = complex_t(std::uniform_real_distribution<>(-1, 1)(rng),
                  std::uniform_real_distribution<>(-1, 1)(rng));
    norm_sq += std::norm(a);
  }
  for (auto& a : s.amps) a /= std::sqrt(norm_sq);
  return s;
}

void BM_ApplySingleQubitGate(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  StateVector s = bench_state(n);
  const Gate g = make_rotation(GateKind::Ry, n / 2, 0.37);
  for (auto _ : state) {
    apply_gate_inplace(s.amps, n, g);
    benchmark::DoNotOptimize(s.amps.data());
  }
  state.SetItemsProcessed(state.iterations() * state_dim(n));
}
BENCHMARK(BM_ApplySingleQubitGate)->Arg(3)->Arg(5)->Arg(7);

void BM_ApplyCnot(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  StateVector s = bench_state(n);
  const Gate g = make_gate(GateKind::CNOT, 0, n - 1);
  for (auto _ : state) {
    apply_gate_inplace(s.amps, n, g);
    benchmark::DoNotOptimize(s.amps.data());
  }
  state.SetItemsProcessed(state.iterations() * state_dim(n));
}
BENCHMARK(BM_ApplyCnot)->Arg(3)->Arg(5)->Arg(7);

void BM_Forward(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const AnsatzSpec spec{n, 5};
  const ParamVector params = init_params(spec, 11);
  const StateVector probe = bench_state(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward(spec, params, probe));
  }
}
BENCHMARK(BM_Forward)->Arg(2)->Arg(3)->Arg(5)->Arg(7);

void BM_GradientSweep(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const AnsatzSpec spec{n, 5};
  const ParamVector params = init_params(spec, 13);
  Oracle oracle = generate_target({n, 5, 17});
  const ProbePool pool = generate_pool(n, ProbeMode::StandardIC);
  std::vector<LabeledPair> labeled;
  for (std::size_t i = 0; i < 8; ++i) {
    labeled.push_back({pool.states[i], oracle.query(pool.states[i])});
  }
  GradWorkspace ws(spec);
  std::vector<double> grad(param_count(spec));
  for (auto _ : state) {
    grad_param_shift_ws(ws, params, labeled, grad.data());
    benchmark::DoNotOptimize(grad.data());
  }
}
BENCHMARK(BM_GradientSweep)->Arg(2)->Arg(3)->Arg(5);

void BM_TrainEpochs(benchmark::State& state) {
  const AnsatzSpec spec{2, 3};
  Oracle oracle = generate_target({2, 3, 19});
  const ProbePool pool = generate_pool(2, ProbeMode::StandardIC);
  std::vector<LabeledPair> labeled;
  for (const auto& probe : pool.states) {
    labeled.push_back({probe, oracle.query(probe)});
  }
  GradWorkspace ws(spec);
  for (auto _ : state) {
    ParamVector params = init_params(spec, 23);
    train_ws(ws, params, labeled, {0.05, 25});
    benchmark::DoNotOptimize(params.data());
  }
}
BENCHMARK(BM_TrainEpochs);

void BM_QbcScorePool(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const AnsatzSpec spec{n, 3};
  Committee committee;
  committee.spec = spec;
  for (std::uint64_t k = 0; k < 6; ++k) {
    committee.members.push_back(init_params(spec, 100 + k));
  }
  const ProbePool pool = generate_pool(n, ProbeMode::StandardIC);
  std::vector<std::size_t> unlabeled(pool.size());
  for (std::size_t i = 0; i < unlabeled.size(); ++i) unlabeled[i] = i;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qbc_scores(committee, pool, unlabeled));
  }
  state.SetItemsProcessed(state.iterations() * pool.size());
}
BENCHMARK(BM_QbcScorePool)->Arg(2)->Arg(3);

void BM_AssembleUnitary(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Circuit c = generate_target({n, 5, 29}).target_circuit();
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_unitary(c));
  }
}
BENCHMARK(BM_AssembleUnitary)->Arg(2)->Arg(4)->Arg(6);

void BM_GenerateTarget(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_target({7, 8, 31}).target_circuit());
  }
}
BENCHMARK(BM_GenerateTarget);

}  // namespace

BENCHMARK_MAIN();
