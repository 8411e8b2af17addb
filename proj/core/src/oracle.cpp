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

#include "alqpt/oracle.hpp"

#include <random>
#include <stdexcept>

namespace alqpt {

StateVector Oracle::query(const StateVector& probe) {
  if (probe.num_qubits != circuit_.num_qubits) {
    throw std::invalid_argument("Oracle::query: qubit count mismatch");
  }
  ++query_count_;
  return apply_circuit(probe, circuit_);
}

Oracle generate_target(const TargetSpec& spec) {
  if (spec.num_qubits < 1 || spec.num_qubits > 7) {
    throw std::invalid_argument("generate_target: qubit count must be in [1, 7]");
  }
  const std::size_t n = spec.num_qubits;
  std::mt19937_64 rng(spec.seed);

  Circuit c;
  c.num_qubits = n;
  for (std::size_t q = 0; q < n; ++q) c.ops.push_back(make_gate(GateKind::H, q));
  for (std::size_t d = 1; d <= spec.depth; ++d) {
    const std::size_t start = (d % 2 == 1) ? 0 : 1;
    for (std::size_t q = start; q + 1 < n; q += 2) {
      c.ops.push_back(make_gate(GateKind::CZ, q, q + 1));
    }
    for (std::size_t q = 0; q < n; ++q) {
      static const GateKind kChoices[3] = {GateKind::T, GateKind::SqrtX,
                                           GateKind::SqrtY};
      c.ops.push_back(make_gate(kChoices[rng() % 3], q));
    }
  }
  for (std::size_t q = 0; q < n; ++q) c.ops.push_back(make_gate(GateKind::H, q));
  return Oracle(std::move(c));
}

}  // namespace alqpt
