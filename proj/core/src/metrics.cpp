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

#include "alqpt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alqpt {

namespace {

void check_dims(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim != b.dim || a.entries.size() != b.entries.size()) {
    throw std::invalid_argument("similarity: dimension mismatch");
  }
}

double frobenius_norm(const cvector_t& m) {
  double s = 0.0;
  for (const auto& x : m) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

double similarity(const UnitaryMatrix& target, const UnitaryMatrix& model) {
  check_dims(target, model);
  double diff_sq = 0.0;
  for (std::size_t i = 0; i < target.entries.size(); ++i) {
    diff_sq += std::norm(model.entries[i] - target.entries[i]);
  }
  const double denom = 2.0 * frobenius_norm(target.entries);
  return std::clamp(1.0 - std::sqrt(diff_sq) / denom, 0.0, 1.0);
}

PhaseAlignedResult phase_aligned_similarity_ex(const UnitaryMatrix& target,
                                               const UnitaryMatrix& model) {
  check_dims(target, model);
  complex_t trace{};
  for (std::size_t i = 0; i < target.entries.size(); ++i) {
    trace += std::conj(target.entries[i]) * model.entries[i];
  }
  if (std::abs(trace) < 1e-12) {
    return PhaseAlignedResult{similarity(target, model), true};
  }
  // ||e^{i phi} C - U||_F^2 = ||C||^2 + ||U||^2 - 2 Re(e^{i phi} tr(U^+ C));
  // the best phase replaces the Re(...) term by |tr(U^+ C)|.
  double c_sq = 0.0;
  double u_sq = 0.0;
  for (std::size_t i = 0; i < target.entries.size(); ++i) {
    c_sq += std::norm(model.entries[i]);
    u_sq += std::norm(target.entries[i]);
  }
  const double diff_sq = std::max(0.0, c_sq + u_sq - 2.0 * std::abs(trace));
  const double value = 1.0 - std::sqrt(diff_sq) / (2.0 * std::sqrt(u_sq));
  return PhaseAlignedResult{std::clamp(value, 0.0, 1.0), false};
}

double improvement(double al_similarity, double rand_similarity) {
  if (rand_similarity <= 1e-12) {
    throw std::domain_error("improvement: RAND similarity too small for a ratio");
  }
  return al_similarity / rand_similarity;
}

}  // namespace alqpt
