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

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace alqpt {

using complex_t = std::complex<double>;
using cvector_t = std::vector<complex_t>;

/// Dimension of the n-qubit state space.
inline std::size_t state_dim(std::size_t num_qubits) {
  return std::size_t{1} << num_qubits;
}

/// Exact complex amplitude vector over the computational basis.
///
/// Basis convention (fixed globally): qubit 0 is the MOST significant bit of
/// the basis index. For n = 2 the index order is |q0 q1> = |00>, |01>, |10>,
/// |11>, so amps[2] is the amplitude of |10> (qubit 0 set, qubit 1 clear).
struct StateVector {
  std::size_t num_qubits = 0;
  cvector_t amps;

  StateVector() = default;
  StateVector(std::size_t n, cvector_t a) : num_qubits(n), amps(std::move(a)) {
    if (amps.size() != state_dim(n)) {
      throw std::invalid_argument("StateVector: amplitude count != 2^n");
    }
  }

  std::size_t dim() const { return amps.size(); }
};

/// Bit position (from the least significant end) of `qubit` in a basis index.
inline std::size_t bit_index(std::size_t num_qubits, std::size_t qubit) {
  return num_qubits - 1 - qubit;
}

/// |index> in the n-qubit computational basis.
inline StateVector basis_state(std::size_t num_qubits, std::size_t index) {
  const std::size_t d = state_dim(num_qubits);
  if (index >= d) throw std::invalid_argument("basis_state: index out of range");
  cvector_t amps(d, complex_t{0.0, 0.0});
  amps[index] = complex_t{1.0, 0.0};
  return StateVector{num_qubits, std::move(amps)};
}

inline double norm_sq(const cvector_t& a) {
  double s = 0.0;
  for (const auto& x : a) s += std::norm(x);
  return s;
}

inline double norm(const cvector_t& a) { return std::sqrt(norm_sq(a)); }

inline double norm(const StateVector& a) { return norm(a.amps); }

/// <a|b> = sum_i conj(a_i) * b_i.
inline complex_t inner_product(const cvector_t& a, const cvector_t& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  complex_t s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline complex_t inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits != b.num_qubits) {
    throw std::invalid_argument("inner_product: qubit count mismatch");
  }
  return inner_product(a.amps, b.amps);
}

/// Euclidean distance between raw amplitude vectors (global-phase sensitive).
inline double state_distance(const cvector_t& a, const cvector_t& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("state_distance: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

/// min over global phase phi of ||a - e^{i phi} b||.
inline double state_distance_phase_invariant(const cvector_t& a,
                                             const cvector_t& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("state_distance: dimension mismatch");
  }
  const double s = norm_sq(a) + norm_sq(b) - 2.0 * std::abs(inner_product(a, b));
  return std::sqrt(s > 0.0 ? s : 0.0);
}

}  // namespace alqpt
