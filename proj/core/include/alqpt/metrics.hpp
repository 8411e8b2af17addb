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

#include "alqpt/circuit.hpp"

namespace alqpt {

/// 1 - ||C - U||_F / (2 ||U||_F), clamped to [0, 1]. Phase-sensitive: a
/// perfect reconstruction up to global phase -1 scores 0, not 1.
double similarity(const UnitaryMatrix& target, const UnitaryMatrix& model);

struct PhaseAlignedResult {
  double value = 0.0;
  /// tr(U^dagger C) vanished; no preferred phase exists and `value` is the
  /// raw similarity.
  bool degenerate = false;
};

/// max over global phase phi of similarity(U, e^{i phi} C); the maximizer is
/// phi* = -arg(tr(U^dagger C)).
PhaseAlignedResult phase_aligned_similarity_ex(const UnitaryMatrix& target,
                                               const UnitaryMatrix& model);

inline double phase_aligned_similarity(const UnitaryMatrix& target,
                                       const UnitaryMatrix& model) {
  return phase_aligned_similarity_ex(target, model).value;
}

/// al_similarity / rand_similarity; throws domain_error when the
/// denominator is <= 1e-12 (undefined ratio).
double improvement(double al_similarity, double rand_similarity);

}  // namespace alqpt
