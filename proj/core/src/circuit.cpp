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

#include "alqpt/circuit.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace alqpt {

void validate_gate(const Gate& gate, std::size_t num_qubits) {
  if (gate.q1 >= num_qubits) {
    throw std::invalid_argument("gate target out of range");
  }
  if (is_two_qubit(gate.kind)) {
    if (gate.q2 >= num_qubits) {
      throw std::invalid_argument("gate target out of range");
    }
    if (gate.q1 == gate.q2) {
      throw std::invalid_argument("two-qubit gate with identical targets");
    }
  }
}

void apply_matrix1_inplace(cvector_t& amps, std::size_t num_qubits,
                           std::size_t qubit, const Mat2& m) {
  const std::size_t dim = amps.size();
  const std::size_t mask = std::size_t{1} << bit_index(num_qubits, qubit);
  const bool diag = m[1] == complex_t{} && m[2] == complex_t{};
  const bool anti = m[0] == complex_t{} && m[3] == complex_t{};
  for (std::size_t g = 0; g < dim; g += 2 * mask) {
    for (std::size_t i = g; i < g + mask; ++i) {
      complex_t& a0 = amps[i];
      complex_t& a1 = amps[i + mask];
      if (diag) {
        a0 *= m[0];
        a1 *= m[3];
      } else if (anti) {
        const complex_t t = m[1] * a1;
        a1 = m[2] * a0;
        a0 = t;
      } else {
        const complex_t t0 = m[0] * a0 + m[1] * a1;
        const complex_t t1 = m[2] * a0 + m[3] * a1;
        a0 = t0;
        a1 = t1;
      }
    }
  }
}

namespace {

void apply_cz_inplace(cvector_t& amps, std::size_t num_qubits, std::size_t q1,
                      std::size_t q2) {
  const std::size_t m1 = std::size_t{1} << bit_index(num_qubits, q1);
  const std::size_t m2 = std::size_t{1} << bit_index(num_qubits, q2);
  const std::size_t both = m1 | m2;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & both) == both) amps[i] = -amps[i];
  }
}

void apply_cnot_inplace(cvector_t& amps, std::size_t num_qubits,
                        std::size_t control, std::size_t target) {
  const std::size_t mc = std::size_t{1} << bit_index(num_qubits, control);
  const std::size_t mt = std::size_t{1} << bit_index(num_qubits, target);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mc) != 0 && (i & mt) == 0) {
      std::swap(amps[i], amps[i | mt]);
    }
  }
}

}  // namespace

void apply_gate_inplace(cvector_t& amps, std::size_t num_qubits, const Gate& gate) {
  validate_gate(gate, num_qubits);
  switch (gate.kind) {
    case GateKind::CZ:
      apply_cz_inplace(amps, num_qubits, gate.q1, gate.q2);
      return;
    case GateKind::CNOT:
      apply_cnot_inplace(amps, num_qubits, gate.q1, gate.q2);
      return;
    default:
      apply_matrix1_inplace(amps, num_qubits, gate.q1,
                            gate_matrix1(gate.kind, gate.angle));
  }
}

void apply_gate_adjoint_inplace(cvector_t& amps, std::size_t num_qubits,
                                const Gate& gate) {
  validate_gate(gate, num_qubits);
  switch (gate.kind) {
    case GateKind::CZ:  // self-adjoint
      apply_cz_inplace(amps, num_qubits, gate.q1, gate.q2);
      return;
    case GateKind::CNOT:  // self-adjoint
      apply_cnot_inplace(amps, num_qubits, gate.q1, gate.q2);
      return;
    case GateKind::Ry:
    case GateKind::Rz:
      apply_matrix1_inplace(amps, num_qubits, gate.q1,
                            gate_matrix1(gate.kind, -gate.angle));
      return;
    default:
      apply_matrix1_inplace(amps, num_qubits, gate.q1,
                            adjoint(gate_matrix1(gate.kind, gate.angle)));
  }
}

void apply_circuit_inplace(cvector_t& amps, const Circuit& circuit) {
  if (amps.size() != state_dim(circuit.num_qubits)) {
    throw std::invalid_argument("apply_circuit: dimension mismatch");
  }
  for (const Gate& g : circuit.ops) {
    apply_gate_inplace(amps, circuit.num_qubits, g);
  }
}

StateVector apply_gate(const StateVector& state, const Gate& gate) {
  StateVector out = state;
  apply_gate_inplace(out.amps, out.num_qubits, gate);
  return out;
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit) {
  if (circuit.num_qubits != state.num_qubits) {
    throw std::invalid_argument("apply_circuit: qubit count mismatch");
  }
  StateVector out = state;
  apply_circuit_inplace(out.amps, circuit);
  return out;
}

UnitaryMatrix assemble_unitary(const Circuit& circuit, std::size_t max_qubits) {
  if (circuit.num_qubits > max_qubits) {
    throw std::runtime_error("assemble_unitary: qubit count above cap");
  }
  const std::size_t dim = state_dim(circuit.num_qubits);
  UnitaryMatrix m;
  m.num_qubits = circuit.num_qubits;
  m.dim = dim;
  m.entries.assign(dim * dim, complex_t{});
  cvector_t col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    col.assign(dim, complex_t{});
    col[j] = complex_t{1.0, 0.0};
    apply_circuit_inplace(col, circuit);
    for (std::size_t r = 0; r < dim; ++r) m.entries[r * dim + j] = col[r];
  }
  return m;
}

double unitarity_error(const UnitaryMatrix& m) {
  const std::size_t dim = m.dim;
  double err_sq = 0.0;
  // Row r of M^dagger M minus I, accumulated without materializing the product.
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      complex_t s{};
      for (std::size_t k = 0; k < dim; ++k) {
        s += std::conj(m.entries[k * dim + r]) * m.entries[k * dim + c];
      }
      if (r == c) s -= complex_t{1.0, 0.0};
      err_sq += std::norm(s);
    }
  }
  return std::sqrt(err_sq);
}

std::string circuit_to_text(const Circuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.num_qubits) + "\n";
  char buf[64];
  for (const Gate& g : circuit.ops) {
    out += gate_name(g.kind);
    out += ' ';
    out += std::to_string(g.q1);
    if (is_two_qubit(g.kind)) {
      out += ' ';
      out += std::to_string(g.q2);
    }
    if (is_rotation(g.kind)) {
      std::snprintf(buf, sizeof(buf), " %.17g", g.angle);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

Circuit circuit_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Circuit circuit;
  bool have_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;  // blank or comment-only line
    if (!have_header) {
      if (head != "qubits") {
        throw std::invalid_argument("circuit text: expected 'qubits N' first");
      }
      if (!(ls >> circuit.num_qubits) || circuit.num_qubits == 0) {
        throw std::invalid_argument("circuit text: bad qubit count");
      }
      have_header = true;
      continue;
    }
    Gate g;
    g.kind = gate_kind_from_name(head);
    if (!(ls >> g.q1)) {
      throw std::invalid_argument("circuit text: missing target on line " +
                                  std::to_string(line_no));
    }
    if (is_two_qubit(g.kind) && !(ls >> g.q2)) {
      throw std::invalid_argument("circuit text: missing second target on line " +
                                  std::to_string(line_no));
    }
    if (is_rotation(g.kind) && !(ls >> g.angle)) {
      throw std::invalid_argument("circuit text: missing angle on line " +
                                  std::to_string(line_no));
    }
    validate_gate(g, circuit.num_qubits);
    circuit.ops.push_back(g);
  }
  if (!have_header) {
    throw std::invalid_argument("circuit text: empty input");
  }
  return circuit;
}

}  // namespace alqpt
