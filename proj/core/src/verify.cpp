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

#include "alqpt/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "alqpt/acquisition.hpp"
#include "alqpt/experiment.hpp"
#include "alqpt/metrics.hpp"
#include "alqpt/seeding.hpp"

namespace alqpt {

namespace {

constexpr double kPi = 3.14159265358979323846;

StateVector random_state(std::size_t n, std::mt19937_64& rng) {
  cvector_t amps(state_dim(n));
  for (auto& a : amps) {
    a = complex_t{2.0 * uniform_unit(rng) - 1.0, 2.0 * uniform_unit(rng) - 1.0};
  }
  const double s = norm(amps);
  for (auto& a : amps) a /= s;
  return StateVector{n, std::move(amps)};
}

struct Checker {
  std::ostream& out;
  bool all_ok = true;

  void check(const std::string& name, const std::function<double()>& deviation,
             double tolerance) {
    double dev = 0.0;
    std::string error;
    try {
      dev = deviation();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && dev <= tolerance;
    all_ok = all_ok && ok;
    out << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!error.empty()) {
      out << " (exception: " << error << ")";
    } else {
      out << " (deviation " << dev << ", tolerance " << tolerance << ")";
    }
    out << "\n";
  }
};

}  // namespace

bool run_self_checks(std::ostream& out) {
  Checker c{out};

  c.check("gate unitarity, all kinds", [] {
    double worst = 0.0;
    const GateKind one_qubit[] = {GateKind::H,     GateKind::T, GateKind::SqrtX,
                                  GateKind::SqrtY, GateKind::X, GateKind::Y,
                                  GateKind::Z,     GateKind::Ry, GateKind::Rz};
    for (GateKind k : one_qubit) {
      const Mat2 m = gate_matrix1(k, 0.37);
      const Mat2 a = adjoint(m);
      // a * m - I elementwise.
      const complex_t p00 = a[0] * m[0] + a[1] * m[2] - 1.0;
      const complex_t p01 = a[0] * m[1] + a[1] * m[3];
      const complex_t p10 = a[2] * m[0] + a[3] * m[2];
      const complex_t p11 = a[2] * m[1] + a[3] * m[3] - 1.0;
      worst = std::max(worst, std::sqrt(std::norm(p00) + std::norm(p01) +
                                        std::norm(p10) + std::norm(p11)));
    }
    return worst;
  }, 1e-12);

  c.check("sqrt gates square to X and Y", [] {
    const Mat2 sx = gate_matrix1(GateKind::SqrtX);
    const Mat2 sy = gate_matrix1(GateKind::SqrtY);
    const Mat2 x = gate_matrix1(GateKind::X);
    const Mat2 y = gate_matrix1(GateKind::Y);
    double worst = 0.0;
    const auto sq_dev = [&](const Mat2& m, const Mat2& want) {
      const Mat2 got{m[0] * m[0] + m[1] * m[2], m[0] * m[1] + m[1] * m[3],
                     m[2] * m[0] + m[3] * m[2], m[2] * m[1] + m[3] * m[3]};
      double d = 0.0;
      for (int i = 0; i < 4; ++i) d += std::norm(got[i] - want[i]);
      return std::sqrt(d);
    };
    worst = std::max(worst, sq_dev(sx, x));
    worst = std::max(worst, sq_dev(sy, y));
    return worst;
  }, 1e-12);

  c.check("Rz(pi/2) Ry(pi/2) Rz(pi/2) |0> closed form", [] {
    StateVector s = basis_state(1, 0);
    s = apply_gate(s, make_rotation(GateKind::Rz, 0, kPi / 2));
    s = apply_gate(s, make_rotation(GateKind::Ry, 0, kPi / 2));
    s = apply_gate(s, make_rotation(GateKind::Rz, 0, kPi / 2));
    const complex_t want0{0.0, -0.70710678118654746};
    const complex_t want1{0.70710678118654746, 0.0};
    return std::sqrt(std::norm(s.amps[0] - want0) + std::norm(s.amps[1] - want1));
  }, 1e-12);

  c.check("norm preservation on random circuits", [] {
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + trial % 5;
      Oracle oracle = generate_target({n, 3, rng()});
      const StateVector s = random_state(n, rng);
      worst = std::max(worst, std::abs(norm(oracle.query(s)) - 1.0));
    }
    return worst;
  }, 1e-10);

  c.check("oracle unitarity at n=3 depth=4", [] {
    Oracle oracle = generate_target({3, 4, 42});
    return unitarity_error(assemble_unitary(oracle.target_circuit()));
  }, 1e-9);

  c.check("loss identity on random instances", [] {
    std::mt19937_64 rng(12);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + trial % 3;
      const AnsatzSpec spec{n, static_cast<std::size_t>(trial % 3)};
      const ParamVector params = init_params(spec, rng());
      std::vector<LabeledPair> pool;
      for (int p = 0; p < 3; ++p) {
        pool.push_back({random_state(n, rng), random_state(n, rng)});
      }
      const double by_overlap = loss(spec, params, pool);
      double by_norm = 0.0;
      for (const auto& pair : pool) {
        const StateVector pred = forward(spec, params, pair.probe);
        by_norm += state_distance(pred.amps, pair.ideal.amps) *
                   state_distance(pred.amps, pair.ideal.amps);
      }
      by_norm /= static_cast<double>(pool.size());
      worst = std::max(worst, std::abs(by_overlap - by_norm));
    }
    return worst;
  }, 1e-12);

  c.check("parameter-shift gradient vs finite differences", [] {
    std::mt19937_64 rng(13);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 1 + trial % 3;
      const AnsatzSpec spec{n, static_cast<std::size_t>(1 + trial % 2)};
      const ParamVector params = init_params(spec, rng());
      std::vector<LabeledPair> pool;
      for (int p = 0; p < 2; ++p) {
        pool.push_back({random_state(n, rng), random_state(n, rng)});
      }
      const auto shift = grad_param_shift(spec, params, pool);
      const auto fd = grad_finite_diff(spec, params, pool, 1e-5);
      for (std::size_t j = 0; j < shift.size(); ++j) {
        worst = std::max(worst, std::abs(shift[j] - fd[j]));
      }
    }
    return worst;
  }, 1e-6);

  c.check("probe pools: size, norm, duplicates", [] {
    double worst = 0.0;
    for (std::size_t n = 1; n <= 2; ++n) {
      const ProbePool standard = generate_pool(n, ProbeMode::StandardIC);
      std::size_t want = 1;
      for (std::size_t q = 0; q < n; ++q) want *= 4;
      if (standard.size() != want) return 1.0;
      for (const auto& s : standard.states) {
        worst = std::max(worst, std::abs(norm(s) - 1.0));
      }
      for (std::size_t i = 0; i < standard.size(); ++i) {
        for (std::size_t j = i + 1; j < standard.size(); ++j) {
          const double overlap =
              std::abs(inner_product(standard.states[i], standard.states[j]));
          if (overlap > 1.0 - 1e-9) return 1.0;  // equal up to phase
        }
      }
    }
    return worst;
  }, 1e-12);

  c.check("QBC two-member closed form", [] {
    // Members predicting |0> and |1>: per-member distance sqrt(2 - sqrt(2)).
    const AnsatzSpec spec{1, 0};
    Committee committee{spec, {{0.0, 0.0, 0.0}, {0.0, kPi, 0.0}}};
    const double got = qbc_score(committee, basis_state(1, 0));
    return std::abs(got - std::sqrt(2.0 - std::sqrt(2.0)));
  }, 1e-12);

  c.check("EMCM vanishes when ensemble equals current", [] {
    const AnsatzSpec spec{2, 1};
    const ParamVector params = init_params(spec, 77);
    Committee ensemble{spec, {params, params}};
    std::mt19937_64 rng(14);
    return emcm_score(params, ensemble, random_state(2, rng));
  }, 1e-12);

  c.check("GS picks the farthest state", [] {
    const ProbePool probes = generate_pool(1, ProbeMode::StandardIC);
    PoolState pool;
    pool.labeled_indices = {0};              // |0>
    pool.unlabeled = {1, 2, 3};              // |1>, |+>, |+i>
    return gs_select(pool, probes) == 1 ? 0.0 : 1.0;  // |1> at distance sqrt(2)
  }, 0.0);

  c.check("similarity identities", [] {
    Oracle oracle = generate_target({2, 3, 5});
    const UnitaryMatrix u = assemble_unitary(oracle.target_circuit());
    UnitaryMatrix minus = u;
    for (auto& e : minus.entries) e = -e;
    double worst = std::abs(similarity(u, u) - 1.0);
    worst = std::max(worst, std::abs(similarity(u, minus) - 0.0));
    worst = std::max(worst, std::abs(phase_aligned_similarity(u, minus) - 1.0));
    worst = std::max(worst, std::abs(improvement(0.9, 0.45) - 2.0));
    return worst;
  }, 1e-12);

  c.check("mini experiment: determinism and budget accounting", [] {
    ExperimentConfig config;
    config.n_qubits = 1;
    config.vqc_depth = 1;
    config.target_depth = 1;
    config.strategies = {StrategyKind::QBC, StrategyKind::RAND};
    config.budget = 3;
    config.bootstrap = 1;
    config.n_vqc = 2;
    config.repeats = 2;
    config.schedule.epochs = 20;
    config.threads = 1;
    const ExperimentResult a = run_experiment(config);
    const ExperimentResult b = run_experiment(config);
    if (records_to_csv(a.records) != records_to_csv(b.records)) return 1.0;
    const std::size_t rows_per_run = config.budget - config.bootstrap + 1;
    const std::size_t want =
        rows_per_run * config.strategies.size() * config.repeats;
    return a.records.size() == want ? 0.0 : 1.0;
  }, 0.0);

  out << (c.all_ok ? "all checks passed\n" : "CHECKS FAILED\n");
  return c.all_ok;
}

}  // namespace alqpt
