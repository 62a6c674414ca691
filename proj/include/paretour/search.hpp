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

// Per-preference constrained tour search. For preference w and multiplier
// lambda the search minimizes the Lagrangian |F| + lambda * g(F, w) with
// 2-opt / Or-opt local search; solve_front alternates inner search phases
// with clamped multiplier ascent, one preference at a time.

#ifndef PARETOUR_SEARCH_HPP
#define PARETOUR_SEARCH_HPP

#include "paretour/core.hpp"
#include "paretour/decomposition.hpp"
#include "paretour/random.hpp"

#include <vector>

namespace paretour {

struct SearchConfig {
  int outer_rounds = 1000;  // multiplier updates per preference
  int inner_moves = 40;     // random proposals per chain and round
  int restarts = 2;         // chains per preference; chain 0 is seeded, the rest random
  double epsilon_g = 1e-3;  // cone membership tolerance for reporting
  RngSeed seed{0};
  MultiplierConfig multipliers{};
  bool warm_start = true;   // seed preference k+1 with the winner of k
  int jobs = 1;             // worker threads, honoured only without warm starts

  void validate() const;
};

struct PreferenceSolution {
  Tour tour;
  ObjectiveVector objectives;
  double g = 0.0;       // cone_constraint(objectives, w)
  double lambda = 0.0;  // multiplier the tour was selected under
  double reward = 0.0;  // lagrangian_reward(objectives, w, lambda)
  bool in_cone = false; // g <= epsilon_g
};

/// Best tour found for fixed lambda. Chain 0 starts from the w-weighted
/// nearest-neighbor tour, so the result's reward never exceeds that tour's.
/// Tours seen along the way are offered to `archive` when given.
PreferenceSolution solve_preference(const BtspInstance& inst, const PreferenceVector& w, double lambda,
                                    const SearchConfig& cfg, ParetoArchive* archive = nullptr);

struct SearchFront {
  ParetoArchive archive;
  std::vector<PreferenceSolution> per_preference;
  MultiplierState multipliers;
  std::size_t evaluations = 0;
};

SearchFront solve_front(const BtspInstance& inst, const PreferenceSet& prefs, const SearchConfig& cfg);

}  // namespace paretour

#endif  // PARETOUR_SEARCH_HPP
