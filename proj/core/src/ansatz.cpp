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

#include "alqpt/ansatz.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "alqpt/seeding.hpp"

namespace alqpt {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.41421356237309504880;

void check_pool(const AnsatzSpec& spec, const std::vector<LabeledPair>& pool) {
  if (pool.empty()) throw std::invalid_argument("loss: empty pool");
  for (const LabeledPair& p : pool) {
    if (p.probe.num_qubits != spec.num_qubits ||
        p.ideal.num_qubits != spec.num_qubits) {
      throw std::invalid_argument("loss: pool qubit count mismatch");
    }
  }
}

}  // namespace

Circuit build_ansatz(const AnsatzSpec& spec, const ParamVector& params) {
  if (params.size() != param_count(spec)) {
    throw std::invalid_argument("build_ansatz: parameter count mismatch");
  }
  const std::size_t n = spec.num_qubits;
  Circuit c;
  c.num_qubits = n;
  c.ops.reserve(params.size() + spec.depth * (n > 0 ? n - 1 : 0));
  std::size_t idx = 0;
  for (std::size_t layer = 0; layer <= spec.depth; ++layer) {
    for (std::size_t q = 0; q < n; ++q) {
      c.ops.push_back(make_rotation(GateKind::Rz, q, params[idx++]));
      c.ops.push_back(make_rotation(GateKind::Ry, q, params[idx++]));
      c.ops.push_back(make_rotation(GateKind::Rz, q, params[idx++]));
    }
    if (layer < spec.depth) {
      for (std::size_t q = 0; q + 1 < n; ++q) {
        c.ops.push_back(make_gate(GateKind::CNOT, q, q + 1));
      }
    }
  }
  return c;
}

ParamVector init_params(const AnsatzSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ParamVector p(param_count(spec));
  for (double& v : p) v = uniform_angle(rng);
  return p;
}

StateVector forward(const AnsatzSpec& spec, const ParamVector& params,
                    const StateVector& probe) {
  if (probe.num_qubits != spec.num_qubits) {
    throw std::invalid_argument("forward: qubit count mismatch");
  }
  return apply_circuit(probe, build_ansatz(spec, params));
}

double loss(const AnsatzSpec& spec, const ParamVector& params,
            const std::vector<LabeledPair>& pool) {
  check_pool(spec, pool);
  const Circuit c = build_ansatz(spec, params);
  cvector_t pred;
  double acc = 0.0;
  for (const LabeledPair& p : pool) {
    pred = p.probe.amps;
    apply_circuit_inplace(pred, c);
    acc += 1.0 - inner_product(p.ideal.amps, pred).real();
  }
  return (2.0 / static_cast<double>(pool.size())) * acc;
}

GradWorkspace::GradWorkspace(const AnsatzSpec& spec) : spec_(spec) {
  const std::size_t p = param_count(spec);
  circuit_ = build_ansatz(spec, ParamVector(p, 0.0));
  rot_pos_.reserve(p);
  rot_qubit_.reserve(p);
  rot_kind_.reserve(p);
  for (std::size_t t = 0; t < circuit_.ops.size(); ++t) {
    const Gate& g = circuit_.ops[t];
    if (is_rotation(g.kind)) {
      rot_pos_.push_back(t);
      rot_qubit_.push_back(g.q1);
      rot_kind_.push_back(g.kind);
    }
  }
  shifted_plus_.resize(p);
  shifted_minus_.resize(p);
  const std::size_t dim = state_dim(spec.num_qubits);
  bra_at_.assign(p, cvector_t(dim));
  pre_.resize(dim);
  bra_.resize(dim);
  scratch_.resize(dim);
}

void GradWorkspace::set_params(const ParamVector& params) {
  if (params.size() != rot_pos_.size()) {
    throw std::invalid_argument("GradWorkspace: parameter count mismatch");
  }
  for (std::size_t j = 0; j < params.size(); ++j) {
    circuit_.ops[rot_pos_[j]].angle = params[j];
    shifted_plus_[j] = gate_matrix1(rot_kind_[j], params[j] + kPi / 2.0);
    shifted_minus_[j] = gate_matrix1(rot_kind_[j], params[j] - kPi / 2.0);
  }
}

void GradWorkspace::forward_into(const cvector_t& probe, cvector_t& out) const {
  out = probe;
  apply_circuit_inplace(out, circuit_);
}

double GradWorkspace::overlap(const cvector_t& probe, const cvector_t& ideal) {
  forward_into(probe, scratch_);
  return inner_product(ideal, scratch_).real();
}

void GradWorkspace::accumulate_shift_overlaps(const cvector_t& probe,
                                              const cvector_t& ideal,
                                              double* acc) {
  const std::size_t n = spec_.num_qubits;
  const std::size_t num_ops = circuit_.ops.size();

  // Backward pass: bra_at_[j] = (gates above rotation j)^dagger |ideal>.
  bra_ = ideal;
  std::size_t j = rot_pos_.size();
  for (std::size_t t = num_ops; t-- > 0;) {
    const Gate& g = circuit_.ops[t];
    if (is_rotation(g.kind)) {
      bra_at_[--j] = bra_;
    }
    apply_gate_adjoint_inplace(bra_, n, g);
  }

  // Forward pass: at rotation j, both shifted overlaps follow from the four
  // cross sums A_kl = sum over pairs of conj(bra[k side]) * pre[l side].
  pre_ = probe;
  j = 0;
  for (std::size_t t = 0; t < num_ops; ++t) {
    const Gate& g = circuit_.ops[t];
    if (is_rotation(g.kind)) {
      const cvector_t& L = bra_at_[j];
      const std::size_t mask = std::size_t{1}
                               << bit_index(n, rot_qubit_[j]);
      complex_t a00{}, a01{}, a10{}, a11{};
      if (rot_kind_[j] == GateKind::Rz) {
        for (std::size_t base = 0; base < pre_.size(); base += 2 * mask) {
          for (std::size_t i = base; i < base + mask; ++i) {
            a00 += std::conj(L[i]) * pre_[i];
            a11 += std::conj(L[i + mask]) * pre_[i + mask];
          }
        }
      } else {
        for (std::size_t base = 0; base < pre_.size(); base += 2 * mask) {
          for (std::size_t i = base; i < base + mask; ++i) {
            const complex_t l0 = std::conj(L[i]);
            const complex_t l1 = std::conj(L[i + mask]);
            a00 += l0 * pre_[i];
            a01 += l0 * pre_[i + mask];
            a10 += l1 * pre_[i];
            a11 += l1 * pre_[i + mask];
          }
        }
      }
      const Mat2& mp = shifted_plus_[j];
      const Mat2& mm = shifted_minus_[j];
      const double o_plus =
          (mp[0] * a00 + mp[1] * a01 + mp[2] * a10 + mp[3] * a11).real();
      const double o_minus =
          (mm[0] * a00 + mm[1] * a01 + mm[2] * a10 + mm[3] * a11).real();
      acc[j] += o_plus - o_minus;
      ++j;
    }
    apply_gate_inplace(pre_, n, g);
  }
}

void grad_param_shift_ws(GradWorkspace& ws, const ParamVector& params,
                         const std::vector<LabeledPair>& pool, double* grad) {
  check_pool(ws.spec(), pool);
  ws.set_params(params);
  const std::size_t p = ws.params();
  for (std::size_t j = 0; j < p; ++j) grad[j] = 0.0;
  for (const LabeledPair& pair : pool) {
    ws.accumulate_shift_overlaps(pair.probe.amps, pair.ideal.amps, grad);
  }
  // d loss / d O = -2/m; the two-point rule divides by 2*sqrt(2).
  const double scale = -1.0 / (static_cast<double>(pool.size()) * kSqrt2);
  for (std::size_t j = 0; j < p; ++j) grad[j] *= scale;
}

std::vector<double> grad_param_shift(const AnsatzSpec& spec,
                                     const ParamVector& params,
                                     const std::vector<LabeledPair>& pool) {
  GradWorkspace ws(spec);
  std::vector<double> grad(param_count(spec));
  grad_param_shift_ws(ws, params, pool, grad.data());
  return grad;
}

std::vector<double> grad_finite_diff(const AnsatzSpec& spec,
                                     const ParamVector& params,
                                     const std::vector<LabeledPair>& pool,
                                     double h) {
  if (h <= 0.0) throw std::invalid_argument("grad_finite_diff: h must be > 0");
  check_pool(spec, pool);
  std::vector<double> grad(params.size());
  ParamVector shifted = params;
  for (std::size_t j = 0; j < params.size(); ++j) {
    shifted[j] = params[j] + h;
    const double lp = loss(spec, shifted, pool);
    shifted[j] = params[j] - h;
    const double lm = loss(spec, shifted, pool);
    shifted[j] = params[j];
    grad[j] = (lp - lm) / (2.0 * h);
  }
  return grad;
}

ParamVector sgd_step(const ParamVector& params, const std::vector<double>& grad,
                     double alpha) {
  if (params.size() != grad.size()) {
    throw std::invalid_argument("sgd_step: length mismatch");
  }
  if (alpha < 0.0) throw std::invalid_argument("sgd_step: negative rate");
  ParamVector out = params;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= alpha * grad[j];
  return out;
}

void train_ws(GradWorkspace& ws, ParamVector& params,
              const std::vector<LabeledPair>& pool,
              const TrainSchedule& schedule) {
  check_pool(ws.spec(), pool);
  if (params.size() != ws.params()) {
    throw std::invalid_argument("train: parameter count mismatch");
  }
  std::vector<double> grad(params.size());
  for (std::size_t epoch = 0; epoch < schedule.epochs; ++epoch) {
    grad_param_shift_ws(ws, params, pool, grad.data());
    for (std::size_t j = 0; j < params.size(); ++j) {
      params[j] -= schedule.alpha * grad[j];
    }
  }
}

ParamVector train(const AnsatzSpec& spec, ParamVector params,
                  const std::vector<LabeledPair>& pool,
                  const TrainSchedule& schedule) {
  GradWorkspace ws(spec);
  train_ws(ws, params, pool, schedule);
  return params;
}

}  // namespace alqpt
