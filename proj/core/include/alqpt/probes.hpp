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

#include <cstddef>
#include <vector>

#include "alqpt/state.hpp"

namespace alqpt {

/// StandardIC: tensor products over {|0>, |1>, |+>, |+i>}, the
/// informationally complete product basis (default).
/// LiteralPauli: P|0...0> for P in {I, X, Y, Z}^tensor-n; kept for
/// comparison runs even though it only reaches basis states up to phase.
enum class ProbeMode { StandardIC, LiteralPauli };

/// The unlabeled candidate pool D_u with exactly 4^n states.
///
/// Index convention: the base-4 digits of the pool index select the
/// per-qubit factor, most significant digit = qubit 0. In StandardIC mode
/// digit d maps to {0: |0>, 1: |1>, 2: |+>, 3: |+i>}; in LiteralPauli mode
/// to the Pauli {0: I, 1: X, 2: Y, 3: Z} applied to |0>.
struct ProbePool {
  std::size_t num_qubits = 0;
  ProbeMode mode = ProbeMode::StandardIC;
  std::vector<StateVector> states;

  std::size_t size() const { return states.size(); }
};

/// Deterministic, order-stable generation; 1 <= n <= 7.
ProbePool generate_pool(std::size_t num_qubits,
                        ProbeMode mode = ProbeMode::StandardIC);

}  // namespace alqpt
