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

#include <array>
#include <cstddef>
#include <string>

#include "alqpt/state.hpp"

namespace alqpt {

enum class GateKind {
  H,
  T,
  SqrtX,
  SqrtY,
  X,
  Y,
  Z,
  CZ,
  CNOT,
  Ry,
  Rz,
};

inline bool is_two_qubit(GateKind k) {
  return k == GateKind::CZ || k == GateKind::CNOT;
}

inline bool is_rotation(GateKind k) {
  return k == GateKind::Ry || k == GateKind::Rz;
}

/// One gate application. `q2` is used by two-qubit kinds only (control = q1
/// for CNOT); `angle` (radians) is used by Ry/Rz only.
struct Gate {
  GateKind kind;
  std::size_t q1 = 0;
  std::size_t q2 = 0;
  double angle = 0.0;
};

inline Gate make_gate(GateKind kind, std::size_t q) { return Gate{kind, q, 0, 0.0}; }
inline Gate make_gate(GateKind kind, std::size_t q1, std::size_t q2) {
  return Gate{kind, q1, q2, 0.0};
}
inline Gate make_rotation(GateKind kind, std::size_t q, double angle) {
  return Gate{kind, q, 0, angle};
}

/// Row-major 2x2 matrix [m00, m01, m10, m11].
using Mat2 = std::array<complex_t, 4>;
/// Row-major 4x4 matrix over the (q1, q2) two-qubit basis |00>,|01>,|10>,|11>.
using Mat4 = std::array<complex_t, 16>;

/// Matrix of a single-qubit kind.
///
/// Conventions: T = diag(1, e^{i pi/4}); sqrt(X) and sqrt(Y) are the
/// principal square roots; Rz(t) = diag(e^{-i t/2}, e^{+i t/2});
/// Ry(t) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]].
Mat2 gate_matrix1(GateKind kind, double angle = 0.0);

/// Matrix of a two-qubit kind (CZ, CNOT with q1 the control).
Mat4 gate_matrix2(GateKind kind);

Mat2 adjoint(const Mat2& m);
Mat4 adjoint(const Mat4& m);

const std::string& gate_name(GateKind kind);

/// Inverse of gate_name; throws on unknown names.
GateKind gate_kind_from_name(const std::string& name);

}  // namespace alqpt
