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

// Comparison algorithms: NSGA-II, MOEA/D with weighted-sum subproblems,
// and per-weight local search on the linear scalarization a1*f1 + a2*f2.
// The evolutionary pair uses order crossover (OX) and segment inversion.

#ifndef PARETOUR_BASELINES_HPP
#define PARETOUR_BASELINES_HPP

#include "paretour/core.hpp"
#include "paretour/random.hpp"
#include "paretour/search.hpp"

#include <span>
#include <vector>

namespace paretour {

struct EvoConfig {
  int population = 100;
  long evaluations = 20000;  // objective-evaluation budget, initial population included
  double crossover_rate = 0.9;
  double mutation_rate = 0.8;
  int neighborhood_T = 10;  // MOEA/D mating / replacement neighborhood
  RngSeed seed{0};

  void validate() const;
};

struct EvoResult {
  ParetoArchive archive;
  long evaluations = 0;
  /// Per generation (initial population first): best f1 and best f2 seen
  /// in the current population.
  std::vector<ObjectiveVector> best_per_generation;
};

/// Order crossover: keeps a slice of `a`, fills the rest in `b`'s order.
std::vector<int> order_crossover(std::span<const int> a, std::span<const int> b, Rng& rng);
/// Reverses a random segment of positions 1..n-1.
void inversion_mutation(std::vector<int>& order, Rng& rng);

/// Fronts of increasing rank (indices into `points`); front 0 is the
/// nondominated set.
std::vector<std::vector<int>> fast_nondominated_sort(std::span<const ObjectiveVector> points);
/// Crowding distance of each member of one front (boundary points get +inf).
std::vector<double> crowding_distance(std::span<const ObjectiveVector> points, std::span<const int> front);

/// Returns the rank-1 set of the final population. `initial`, when given,
/// seeds the population (cycled to fill it) instead of random tours.
EvoResult nsga2(const BtspInstance& inst, const EvoConfig& cfg, std::span<const Tour> initial = {});

/// K >= 2 weighted-sum subproblems with weights (i/(K-1), 1 - i/(K-1)).
/// Returns the nondominated members of the final subproblem population.
EvoResult moead(const BtspInstance& inst, const EvoConfig& cfg, int K);

struct WeightPair {
  double a1 = 0.5;
  double a2 = 0.5;
};

/// `count` weights evenly spaced from (0, 1) to (1, 0).
std::vector<WeightPair> uniform_weights(int count);

/// Local search on a1*f1 + a2*f2 for every weight; archives the winners.
ParetoArchive weighted_sum(const BtspInstance& inst, std::span<const WeightPair> alphas, const SearchConfig& cfg);

}  // namespace paretour

#endif  // PARETOUR_BASELINES_HPP
