// Copyright 2026 The Paretour Authors
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

#ifndef PARETOUR_RANDOM_HPP
#define PARETOUR_RANDOM_HPP

#include <cstdint>
#include <random>

namespace paretour {

using Rng = std::mt19937_64;

struct RngSeed {
  std::uint64_t value = 0;
};

/// splitmix64 finalizer; used to derive independent substreams.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of substream `stream` of `seed`.
constexpr RngSeed derive_seed(RngSeed seed, std::uint64_t stream) {
  return {mix64(seed.value ^ mix64(stream + 0x632be59bd9b4e019ULL))};
}

inline Rng make_rng(RngSeed seed) { return Rng(seed.value); }

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, n).
inline int uniform_index(Rng& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

}  // namespace paretour

#endif  // PARETOUR_RANDOM_HPP
