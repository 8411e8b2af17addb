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

#include "alqpt/probes.hpp"

#include <array>
#include <stdexcept>

namespace alqpt {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

using Single = std::array<complex_t, 2>;

// StandardIC per-qubit factors: |0>, |1>, |+>, |+i>.
const std::array<Single, 4> kStandardSet = {{
    {complex_t{1.0, 0.0}, complex_t{0.0, 0.0}},
    {complex_t{0.0, 0.0}, complex_t{1.0, 0.0}},
    {complex_t{kInvSqrt2, 0.0}, complex_t{kInvSqrt2, 0.0}},
    {complex_t{kInvSqrt2, 0.0}, complex_t{0.0, kInvSqrt2}},
}};

// LiteralPauli per-qubit factors: I|0>, X|0>, Y|0>, Z|0>.
const std::array<Single, 4> kPauliSet = {{
    {complex_t{1.0, 0.0}, complex_t{0.0, 0.0}},
    {complex_t{0.0, 0.0}, complex_t{1.0, 0.0}},
    {complex_t{0.0, 0.0}, complex_t{0.0, 1.0}},
    {complex_t{1.0, 0.0}, complex_t{0.0, 0.0}},
}};

}  // namespace

ProbePool generate_pool(std::size_t num_qubits, ProbeMode mode) {
  if (num_qubits < 1 || num_qubits > 7) {
    throw std::invalid_argument("generate_pool: qubit count must be in [1, 7]");
  }
  const auto& set =
      mode == ProbeMode::StandardIC ? kStandardSet : kPauliSet;
  std::size_t pool_size = 1;
  for (std::size_t q = 0; q < num_qubits; ++q) pool_size *= 4;

  ProbePool pool;
  pool.num_qubits = num_qubits;
  pool.mode = mode;
  pool.states.reserve(pool_size);
  for (std::size_t index = 0; index < pool_size; ++index) {
    // Digits of `index` in base 4, most significant digit first (= qubit 0).
    cvector_t amps{complex_t{1.0, 0.0}};
    std::size_t rest = index;
    std::size_t place = pool_size / 4;
    for (std::size_t q = 0; q < num_qubits; ++q) {
      const Single& factor = set[rest / place];
      rest %= place;
      place /= 4;
      cvector_t next(amps.size() * 2);
      for (std::size_t i = 0; i < amps.size(); ++i) {
        next[2 * i] = amps[i] * factor[0];
        next[2 * i + 1] = amps[i] * factor[1];
      }
      amps = std::move(next);
    }
    pool.states.emplace_back(num_qubits, std::move(amps));
  }
  return pool;
}

}  // namespace alqpt
