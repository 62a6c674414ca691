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

// Tour neighborhoods shared by the constrained search solver and the
// weighted-sum baseline: 2-opt segment reversal and Or-opt relocation of
// segments of 1-3 cities. Moves keep city 0 at position 0 so orders stay in
// canonical rotation. Objective deltas are O(1) per proposal.

#ifndef PARETOUR_NEIGHBORHOOD_HPP
#define PARETOUR_NEIGHBORHOOD_HPP

#include "paretour/core.hpp"
#include "paretour/random.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace paretour {

/// Scalar cost of an objective vector; the search minimizes it.
using ScalarCost = std::function<double(const ObjectiveVector&)>;

/// Greedy tour from city 0 under the blended edge cost c1*d1 + c2*d2.
/// Ties go to the lowest city index.
std::vector<int> nearest_neighbor_order(const BtspInstance& inst, double c1, double c2);

/// Uniform random order with city 0 first.
std::vector<int> random_order(int n, Rng& rng);

struct SearchState {
  std::vector<int> order;
  ObjectiveVector objectives;
  double cost = 0.0;
};

/// First-improvement local search on a scalar cost of the objective vector.
/// When an archive is attached, every proposal that would enter it is
/// materialized, re-evaluated exactly, and inserted.
class TourImprover {
 public:
  TourImprover(const BtspInstance& inst, ScalarCost cost, ParetoArchive* archive = nullptr);

  void set_cost(ScalarCost cost) { cost_ = std::move(cost); }
  double cost(const ObjectiveVector& f) const { return cost_(f); }

  /// Evaluates `order` exactly (counted as one evaluation).
  SearchState start(std::vector<int> order);
  /// Re-scores a state after the cost function changed.
  void rescore(SearchState& state) const { state.cost = cost_(state.objectives); }

  /// `proposals` uniformly random 2-opt / Or-opt moves; each is accepted
  /// iff it strictly lowers the cost. Returns the number accepted.
  int random_moves(SearchState& state, long proposals, Rng& rng);

  /// Sweeps the full neighborhood (from a random offset) taking the first
  /// improving move until none is left. Returns the number accepted.
  int polish(SearchState& state, Rng& rng);

  std::size_t evaluations() const { return evaluations_; }

 private:
  bool try_two_opt(SearchState& state, int i, int j);
  bool try_or_opt(SearchState& state, int i, int len, int k);
  void offer(const std::vector<int>& order, const ObjectiveVector& approx);
  bool accept(SearchState& state, std::vector<int> next, double approx_cost);

  const BtspInstance& inst_;
  ScalarCost cost_;
  ParetoArchive* archive_;
  std::size_t evaluations_ = 0;
};

/// Applies the 2-opt move reversing positions i..j.
void apply_two_opt(std::vector<int>& order, int i, int j);
/// Moves positions i..i+len-1 to just after the city currently at position k.
std::vector<int> apply_or_opt(const std::vector<int>& order, int i, int len, int k);

}  // namespace paretour

#endif  // PARETOUR_NEIGHBORHOOD_HPP
