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
#include <cmath>
#include <random>
#include <vector>

#include "alqpt/circuit.hpp"
#include "alqpt/seeding.hpp"
#include "alqpt/state.hpp"

namespace alqpt_test {

constexpr double kPi = 3.14159265358979323846;

inline alqpt::StateVector random_state(std::size_t n, std::mt19937_64& rng) {
  alqpt::cvector_t amps(alqpt::state_dim(n));
  for (auto& a : amps) {
    a = alqpt::complex_t{2.0 * alqpt::uniform_unit(rng) - 1.0,
                         2.0 * alqpt::uniform_unit(rng) - 1.0};
  }
  const double s = alqpt::norm(amps);
  for (auto& a : amps) a /= s;
  return alqpt::StateVector{n, std::move(amps)};
}

inline alqpt::Gate random_gate(std::size_t n, std::mt19937_64& rng) {
  using alqpt::GateKind;
  static const GateKind kOne[] = {GateKind::H, GateKind::T,     GateKind::SqrtX,
                                  GateKind::SqrtY, GateKind::X, GateKind::Y,
                                  GateKind::Z};
  const std::size_t pick = rng() % (n >= 2 ? 4 : 3);
  switch (pick) {
    case 0:
      return alqpt::make_gate(kOne[rng() % 7], rng() % n);
    case 1:
      return alqpt::make_rotation(GateKind::Ry, rng() % n,
                                  alqpt::uniform_angle(rng));
    case 2:
      return alqpt::make_rotation(GateKind::Rz, rng() % n,
                                  alqpt::uniform_angle(rng));
    default: {
      const std::size_t q1 = rng() % n;
      std::size_t q2 = rng() % (n - 1);
      if (q2 >= q1) ++q2;
      return alqpt::make_gate(rng() % 2 ? GateKind::CZ : GateKind::CNOT, q1, q2);
    }
  }
}

inline alqpt::Circuit random_circuit(std::size_t n, std::size_t gates,
                                     std::mt19937_64& rng) {
  alqpt::Circuit c;
  c.num_qubits = n;
  for (std::size_t g = 0; g < gates; ++g) c.ops.push_back(random_gate(n, rng));
  return c;
}

/// Independent dense oracle: embeds a gate's matrix by explicit basis-index
/// bookkeeping (no strided code shared with the library).
inline alqpt::cvector_t dense_apply(const alqpt::cvector_t& amps, std::size_t n,
                                    const alqpt::Gate& gate) {
  using alqpt::complex_t;
  alqpt::cvector_t out(amps.size(), complex_t{});
  if (!alqpt::is_two_qubit(gate.kind)) {
    const alqpt::Mat2 m = alqpt::gate_matrix1(gate.kind, gate.angle);
    const std::size_t pos = alqpt::bit_index(n, gate.q1);
    for (std::size_t j = 0; j < amps.size(); ++j) {
      const std::size_t b = (j >> pos) & 1;
      for (std::size_t bp = 0; bp < 2; ++bp) {
        const std::size_t jp = (j & ~(std::size_t{1} << pos)) | (bp << pos);
        out[jp] += m[bp * 2 + b] * amps[j];
      }
    }
    return out;
  }
  const alqpt::Mat4 m = alqpt::gate_matrix2(gate.kind);
  const std::size_t p1 = alqpt::bit_index(n, gate.q1);
  const std::size_t p2 = alqpt::bit_index(n, gate.q2);
  for (std::size_t j = 0; j < amps.size(); ++j) {
    const std::size_t b = ((j >> p1) & 1) * 2 + ((j >> p2) & 1);
    for (std::size_t bp = 0; bp < 4; ++bp) {
      std::size_t jp = j & ~(std::size_t{1} << p1) & ~(std::size_t{1} << p2);
      jp |= ((bp >> 1) & 1) << p1;
      jp |= (bp & 1) << p2;
      out[jp] += m[bp * 4 + b] * amps[j];
    }
  }
  return out;
}

inline double max_abs_diff(const alqpt::cvector_t& a, const alqpt::cvector_t& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

/// 2x2 complex product, used to evaluate closed forms on paper.
using M2 = std::array<alqpt::complex_t, 4>;
inline M2 mul2(const M2& a, const M2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace alqpt_test
