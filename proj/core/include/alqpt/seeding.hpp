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
#include <random>

namespace alqpt {

/// Purpose tags for deriving independent sub-seeds from one base seed.
/// Values are part of the reproducibility contract; do not renumber.
enum class SeedPurpose : std::uint64_t {
  kTarget = 1,     // oracle circuit of a repeat
  kBootstrap = 2,  // bootstrap label choice of a repeat
  kMember = 3,     // parameter init of a committee member
  kStrategy = 4,   // per-strategy rng (RAND selection)
};

namespace detail {

/// splitmix64 finalizer; good avalanche, stable across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// Deterministic sub-seed from (base, purpose, a, b). Streams for distinct
/// argument tuples are independent for all practical purposes.
inline std::uint64_t derive_seed(std::uint64_t base, SeedPurpose purpose,
                                 std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t h = detail::splitmix64(base);
  h = detail::splitmix64(h ^ static_cast<std::uint64_t>(purpose));
  h = detail::splitmix64(h ^ a);
  h = detail::splitmix64(h ^ b);
  return h;
}

/// Uniform double in [0, 1) from the top 53 bits of one rng draw.
/// Used instead of std::uniform_real_distribution, whose output is not
/// pinned down by the standard; this mapping is bit-stable everywhere.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform angle in [-pi, pi).
inline double uniform_angle(std::mt19937_64& rng) {
  constexpr double kPi = 3.14159265358979323846;
  return (2.0 * uniform_unit(rng) - 1.0) * kPi;
}

/// Uniform index in [0, n) by modulo reduction. The bias for n << 2^64 is
/// far below anything observable; determinism is what matters here.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
}

}  // namespace alqpt
