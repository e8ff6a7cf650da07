/* Copyright 2026 The vqewarm Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef VQEWARM_RNG_HPP_
#define VQEWARM_RNG_HPP_

#include <cstdint>
#include <random>

namespace vqewarm {

// All randomness flows through std::mt19937_64 (whose output sequence is
// fixed by the standard) and the explicit mappings below. The
// implementation-defined std::*_distribution facilities are not used, so
// every seeded result is reproducible across platforms and compilers.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from a root seed and up to two stream
// identifiers. Every task (trial, run, point selection) gets its own stream
// so the execution schedule never affects results.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream,
                                 std::uint64_t substream = 0) {
  std::uint64_t state = root;
  std::uint64_t h = splitmix64(state);
  state ^= stream + 0x9e3779b97f4a7c15ULL;
  h ^= splitmix64(state);
  state ^= substream + 0xbf58476d1ce4e5b9ULL;
  h ^= splitmix64(state);
  return h;
}

// Uniform double in [0, 1), built from the top 53 bits of one draw.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi); a degenerate interval returns lo.
inline double uniform_in(Rng& rng, double lo, double hi) {
  return lo + uniform_unit(rng) * (hi - lo);
}

// Consumes exactly one draw regardless of outcome.
inline bool bernoulli(Rng& rng, double p) { return uniform_unit(rng) < p; }

// Fair +/-1 draw.
inline int rademacher(Rng& rng) { return (rng() >> 63) != 0 ? 1 : -1; }

}  // namespace vqewarm

#endif  // VQEWARM_RNG_HPP_
