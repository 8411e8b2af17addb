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

#include "alqpt/circuit.hpp"
#include "alqpt/state.hpp"

namespace alqpt {

/// Recipe for the hidden target process: a seeded random circuit.
struct TargetSpec {
  std::size_t num_qubits = 1;
  std::size_t depth = 0;  // number of CZ + random-gate layers
  std::uint64_t seed = 0;
};

/// The unknown process, queryable one probe at a time at unit cost.
/// Learners must only call query(); the circuit accessor exists for
/// metrics and audit, not for acquisition or training.
class Oracle {
 public:
  explicit Oracle(Circuit target) : circuit_(std::move(target)) {}

  StateVector query(const StateVector& probe);

  std::uint64_t query_count() const { return query_count_; }
  const Circuit& target_circuit() const { return circuit_; }

 private:
  Circuit circuit_;
  std::uint64_t query_count_ = 0;
};

/// Deterministic random target:
///   H on every qubit;
///   for each depth d = 1..depth:
///     CZ brickwork on pairs (0,1),(2,3),... for odd d and (1,2),(3,4),...
///     for even d (the last qubit idles when unpaired), then one gate drawn
///     uniformly from {T, sqrt(X), sqrt(Y)} per qubit, draws consumed in
///     (depth, qubit) order;
///   H on every qubit.
/// depth 0 gives the identity (the H walls cancel). 1 <= n <= 7.
Oracle generate_target(const TargetSpec& spec);

}  // namespace alqpt
