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
#include <string>
#include <vector>

#include "alqpt/circuit.hpp"
#include "alqpt/state.hpp"

namespace alqpt {

/// Layout of the trainable circuit: k+1 single-qubit rotation layers
/// interlaced with k CNOT entangling layers on the linear chain
/// CNOT(q, q+1), q = 0..n-2. Each single-qubit layer applies Rz, Ry, Rz to
/// every qubit, so the parameter count is 3n(k+1).
struct AnsatzSpec {
  std::size_t num_qubits = 1;
  std::size_t depth = 0;  // number of entangling layers (k)
};

/// Flat parameter list in the fixed consumption order: layer-major, then
/// qubit index, then gate position (Rz, Ry, Rz). This order is the
/// serialization contract; gradients use the same indexing.
using ParamVector = std::vector<double>;

inline std::size_t param_count(const AnsatzSpec& spec) {
  return 3 * spec.num_qubits * (spec.depth + 1);
}

/// One training example: a probe state and the oracle's label for it.
struct LabeledPair {
  StateVector probe;
  StateVector ideal;
};

struct TrainSchedule {
  double alpha = 0.05;
  std::size_t epochs = 200;
};

/// Instantiates the circuit at the given parameters.
Circuit build_ansatz(const AnsatzSpec& spec, const ParamVector& params);

/// Uniform parameters on [-pi, pi) from a dedicated generator.
ParamVector init_params(const AnsatzSpec& spec, std::uint64_t seed);

/// C(theta)|probe>.
StateVector forward(const AnsatzSpec& spec, const ParamVector& params,
                    const StateVector& probe);

/// (2/m) * sum_i [1 - Re<ideal_i|C(theta)|probe_i>]; in [0, 4].
double loss(const AnsatzSpec& spec, const ParamVector& params,
            const std::vector<LabeledPair>& pool);

/// Exact gradient of the loss by the two-point parameter-shift rule.
///
/// Every parameter enters through one rotation gate, so each overlap
/// O_i(theta_j) = Re<ideal_i|C(theta)|probe_i> obeys
///   O(t) = A cos(t/2) + B sin(t/2) + C,
/// which makes [O(t+s) - O(t-s)] / (4 sin(s/2)) the exact derivative for
/// any shift s; this implementation uses s = pi/2 (denominator 2*sqrt(2)).
std::vector<double> grad_param_shift(const AnsatzSpec& spec,
                                     const ParamVector& params,
                                     const std::vector<LabeledPair>& pool);

/// Central finite differences of the loss; the test oracle for the rule above.
std::vector<double> grad_finite_diff(const AnsatzSpec& spec,
                                     const ParamVector& params,
                                     const std::vector<LabeledPair>& pool,
                                     double h);

/// params - alpha * grad.
ParamVector sgd_step(const ParamVector& params, const std::vector<double>& grad,
                     double alpha);

/// schedule.epochs full-pool gradient steps at rate schedule.alpha.
/// Deterministic: same inputs give bit-identical output.
ParamVector train(const AnsatzSpec& spec, ParamVector params,
                  const std::vector<LabeledPair>& pool,
                  const TrainSchedule& schedule);

/// Reusable state for gradient sweeps. A sweep evaluates all shifted
/// overlaps of one (probe, ideal) pair in two passes over the circuit
/// instead of re-simulating per parameter; training loops and acquisition
/// scoring share this scratch to avoid reallocation.
class GradWorkspace {
 public:
  explicit GradWorkspace(const AnsatzSpec& spec);

  const AnsatzSpec& spec() const { return spec_; }
  std::size_t params() const { return rot_qubit_.size(); }

  /// Installs parameter values (rotation angles and their shifted matrices).
  void set_params(const ParamVector& params);

  /// C(theta)|probe> for the installed parameters.
  void forward_into(const cvector_t& probe, cvector_t& out) const;

  /// Re<ideal|C(theta)|probe> for the installed parameters.
  double overlap(const cvector_t& probe, const cvector_t& ideal);

  /// Adds O(theta_j + pi/2) - O(theta_j - pi/2) to acc[j] for every j,
  /// with O = Re<ideal|C(theta)|probe>.
  void accumulate_shift_overlaps(const cvector_t& probe, const cvector_t& ideal,
                                 double* acc);

 private:
  AnsatzSpec spec_;
  Circuit circuit_;
  std::vector<std::size_t> rot_pos_;    // param j -> circuit_.ops index
  std::vector<std::size_t> rot_qubit_;  // param j -> qubit
  std::vector<GateKind> rot_kind_;      // param j -> Ry or Rz
  std::vector<Mat2> shifted_plus_;
  std::vector<Mat2> shifted_minus_;
  std::vector<cvector_t> bra_at_;  // per-rotation bra-side states
  cvector_t pre_, bra_, scratch_;
};

/// Gradient of the pool loss using a caller-provided workspace; equals
/// grad_param_shift. `grad` must have param_count entries.
void grad_param_shift_ws(GradWorkspace& ws, const ParamVector& params,
                         const std::vector<LabeledPair>& pool, double* grad);

/// train() on a caller-provided workspace; params are updated in place.
void train_ws(GradWorkspace& ws, ParamVector& params,
              const std::vector<LabeledPair>& pool, const TrainSchedule& schedule);

/// Flat JSON array of the parameters in serialization order.
std::string params_to_json(const ParamVector& params);
ParamVector params_from_json(const std::string& text);

}  // namespace alqpt
