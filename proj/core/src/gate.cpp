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

#include "alqpt/gate.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace alqpt {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

Mat2 gate_matrix1(GateKind kind, double angle) {
  const complex_t i{0.0, 1.0};
  switch (kind) {
    case GateKind::H:
      return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    case GateKind::T:
      return {1.0, 0.0, 0.0, std::exp(i * (kPi / 4.0))};
    case GateKind::SqrtX:
      return {0.5 * complex_t{1.0, 1.0}, 0.5 * complex_t{1.0, -1.0},
              0.5 * complex_t{1.0, -1.0}, 0.5 * complex_t{1.0, 1.0}};
    case GateKind::SqrtY:
      return {0.5 * complex_t{1.0, 1.0}, 0.5 * complex_t{-1.0, -1.0},
              0.5 * complex_t{1.0, 1.0}, 0.5 * complex_t{1.0, 1.0}};
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y:
      return {0.0, -i, i, 0.0};
    case GateKind::Z:
      return {1.0, 0.0, 0.0, -1.0};
    case GateKind::Ry: {
      const double c = std::cos(angle / 2.0);
      const double s = std::sin(angle / 2.0);
      return {c, -s, s, c};
    }
    case GateKind::Rz: {
      return {std::exp(-i * (angle / 2.0)), 0.0, 0.0, std::exp(i * (angle / 2.0))};
    }
    default:
      throw std::invalid_argument("gate_matrix1: not a single-qubit kind");
  }
}

Mat4 gate_matrix2(GateKind kind) {
  switch (kind) {
    case GateKind::CZ:
      return {1, 0, 0, 0,  //
              0, 1, 0, 0,  //
              0, 0, 1, 0,  //
              0, 0, 0, -1};
    case GateKind::CNOT:
      return {1, 0, 0, 0,  //
              0, 1, 0, 0,  //
              0, 0, 0, 1,  //
              0, 0, 1, 0};
    default:
      throw std::invalid_argument("gate_matrix2: not a two-qubit kind");
  }
}

Mat2 adjoint(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

Mat4 adjoint(const Mat4& m) {
  Mat4 r;
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < 4; ++col) {
      r[row * 4 + col] = std::conj(m[col * 4 + row]);
    }
  }
  return r;
}

const std::string& gate_name(GateKind kind) {
  static const std::string names[] = {"H",  "T", "SX",   "SY",  "X", "Y",
                                      "Z",  "CZ", "CNOT", "RY",  "RZ"};
  return names[static_cast<std::size_t>(kind)];
}

GateKind gate_kind_from_name(const std::string& name) {
  static const std::unordered_map<std::string, GateKind> table = {
      {"H", GateKind::H},       {"T", GateKind::T},
      {"SX", GateKind::SqrtX},  {"SY", GateKind::SqrtY},
      {"X", GateKind::X},       {"Y", GateKind::Y},
      {"Z", GateKind::Z},       {"CZ", GateKind::CZ},
      {"CNOT", GateKind::CNOT}, {"RY", GateKind::Ry},
      {"RZ", GateKind::Rz},
  };
  auto it = table.find(name);
  if (it == table.end()) {
    throw std::invalid_argument("unknown gate name: " + name);
  }
  return it->second;
}

}  // namespace alqpt
