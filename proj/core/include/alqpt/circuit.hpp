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
#include <string>
#include <vector>

#include "alqpt/gate.hpp"
#include "alqpt/state.hpp"

namespace alqpt {

/// Ordered gate list over a fixed register. Gates are applied first to last.
struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> ops;
};

/// Throws invalid_argument if the gate's targets do not fit the register.
void validate_gate(const Gate& gate, std::size_t num_qubits);

/// In-place primitives behind the pure operations below. These mutate `amps`
/// by strided traversal; `amps.size()` must be 2^num_qubits.
void apply_gate_inplace(cvector_t& amps, std::size_t num_qubits, const Gate& gate);
void apply_gate_adjoint_inplace(cvector_t& amps, std::size_t num_qubits,
                                const Gate& gate);
void apply_circuit_inplace(cvector_t& amps, const Circuit& circuit);

/// Applies an arbitrary 2x2 matrix at `qubit`. Not necessarily unitary;
/// used by gradient sweeps with shifted rotation matrices.
void apply_matrix1_inplace(cvector_t& amps, std::size_t num_qubits,
                           std::size_t qubit, const Mat2& m);

/// Pure gate action; the input state is not modified.
StateVector apply_gate(const StateVector& state, const Gate& gate);

/// Left-fold of apply_gate over circuit.ops.
StateVector apply_circuit(const StateVector& state, const Circuit& circuit);

/// Dense unitary, row-major entries[row * dim + col].
struct UnitaryMatrix {
  std::size_t num_qubits = 0;
  std::size_t dim = 0;
  cvector_t entries;

  complex_t at(std::size_t row, std::size_t col) const {
    return entries[row * dim + col];
  }
};

/// Column j = circuit applied to |j>. Dense assembly is quadratic in the
/// state dimension; the cap keeps it for metrics, not simulation.
UnitaryMatrix assemble_unitary(const Circuit& circuit, std::size_t max_qubits = 7);

/// ||M^dagger M - I||_F; assemble_unitary output stays below 1e-9.
double unitarity_error(const UnitaryMatrix& m);

/// Line-oriented text form for audit and replay:
///   qubits N
///   GATE q [q2] [angle]
/// one gate per line, '#' starts a comment, angles printed with %.17g so a
/// round trip is bit-exact.
std::string circuit_to_text(const Circuit& circuit);
Circuit circuit_from_text(const std::string& text);

}  // namespace alqpt
