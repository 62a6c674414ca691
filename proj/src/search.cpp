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

#include "paretour/search.hpp"

#include "paretour/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace paretour {

void SearchConfig::validate() const {
  if (outer_rounds < 1 || inner_moves < 1 || restarts < 1)
    throw InvalidInput("search counts (outer_rounds, inner_moves, restarts) must be >= 1");
  if (!(epsilon_g > 0.0)) throw InvalidInput("epsilon_g must be > 0");
  if (jobs < 1) throw InvalidInput("jobs must be >= 1");
  MultiplierState::uniform(1, multipliers);
}

namespace {

ScalarCost lagrangian_cost(const PreferenceVector& w, double lambda) {
  return [w, lambda](const ObjectiveVector& f) {
    return surrogate_objective(f) + lambda * safe_cone_constraint(f, w);
  };
}

PreferenceSolution describe(const SearchState& s, const PreferenceVector& w, double lambda,
                            double epsilon_g) {
  PreferenceSolution out;
  out.tour = Tour(s.order);
  out.objectives = s.objectives;
  out.g = safe_cone_constraint(s.objectives, w);
  out.lambda = lambda;
  out.reward = surrogate_objective(s.objectives) + lambda * out.g;
  out.in_cone = out.g <= epsilon_g;
  return out;
}

const SearchState& best_of(const std::vector<SearchState>& chains) {
  return *std::min_element(chains.begin(), chains.end(),
                           [](const auto& a, const auto& b) { return a.cost < b.cost; });
}

struct PreferenceRun {
  PreferenceSolution solution;
  std::vector<int> winner_order;
  double final_lambda = 0.0;
  std::size_t evaluations = 0;
};

// Inner search / multiplier ascent loop for one preference.
PreferenceRun run_preference(const BtspInstance& inst, const PreferenceVector& w,
                             std::vector<int> seed_order, const SearchConfig& cfg, Rng& rng,
                             ParetoArchive& archive) {
  MultiplierState mult = MultiplierState::uniform(1, cfg.multipliers);
  TourImprover improver(inst, lagrangian_cost(w, mult.lambdas[0]), &archive);

  std::vector<SearchState> chains;
  chains.push_back(improver.start(std::move(seed_order)));
  for (int r = 1; r < cfg.restarts; ++r) chains.push_back(improver.start(random_order(inst.size(), rng)));

  double used_lambda = mult.lambdas[0];
  for (int round = 0; round < cfg.outer_rounds; ++round) {
    used_lambda = mult.lambdas[0];
    improver.set_cost(lagrangian_cost(w, used_lambda));
    std::vector<double> g;
    for (auto& chain : chains) {
      improver.rescore(chain);
      improver.random_moves(chain, cfg.inner_moves, rng);
      if (round + 1 == cfg.outer_rounds) improver.polish(chain, rng);
      g.push_back(safe_cone_constraint(chain.objectives, w));
    }
    const std::vector<std::vector<double>> batch{std::move(g)};
    mult = update_multipliers(mult, batch);
  }

  const SearchState& best = best_of(chains);
  PreferenceRun run;
  run.solution = describe(best, w, used_lambda, cfg.epsilon_g);
  run.winner_order = best.order;
  run.final_lambda = mult.lambdas[0];
  run.evaluations = improver.evaluations();
  return run;
}

}  // namespace

PreferenceSolution solve_preference(const BtspInstance& inst, const PreferenceVector& w, double lambda,
                                    const SearchConfig& cfg, ParetoArchive* archive) {
  cfg.validate();
  validate_preference(w);
  if (!(lambda >= 0.0)) throw InvalidInput("lambda must be >= 0");
  Rng rng = make_rng(cfg.seed);
  TourImprover improver(inst, lagrangian_cost(w, lambda), archive);
  std::vector<SearchState> chains;
  chains.push_back(improver.start(nearest_neighbor_order(inst, w.w1, w.w2)));
  for (int r = 1; r < cfg.restarts; ++r) chains.push_back(improver.start(random_order(inst.size(), rng)));
  const long budget = static_cast<long>(cfg.outer_rounds) * cfg.inner_moves;
  for (auto& chain : chains) {
    improver.random_moves(chain, budget, rng);
    improver.polish(chain, rng);
  }
  return describe(best_of(chains), w, lambda, cfg.epsilon_g);
}

SearchFront solve_front(const BtspInstance& inst, const PreferenceSet& prefs, const SearchConfig& cfg) {
  cfg.validate();
  const int K = prefs.size();
  SearchFront front;
  front.multipliers = MultiplierState::uniform(K, cfg.multipliers);
  front.per_preference.resize(static_cast<std::size_t>(K));

  if (cfg.warm_start) {
    std::vector<int> seed_order = nearest_neighbor_order(inst, prefs[0].w1, prefs[0].w2);
    for (int k = 0; k < K; ++k) {
      Rng rng = make_rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(k)));
      auto run = run_preference(inst, prefs[k], std::move(seed_order), cfg, rng, front.archive);
      seed_order = run.winner_order;
      front.per_preference[static_cast<std::size_t>(k)] = std::move(run.solution);
      front.multipliers.lambdas[k] = run.final_lambda;
      front.evaluations += run.evaluations;
    }
    return front;
  }

  // Independent preferences: each worker fills its own archive; archives
  // are merged in preference order so the result ignores the schedule.
  std::vector<ParetoArchive> archives(static_cast<std::size_t>(K));
  std::vector<PreferenceRun> runs(static_cast<std::size_t>(K));
  auto work = [&](int k) {
    Rng rng = make_rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(k)));
    runs[static_cast<std::size_t>(k)] =
        run_preference(inst, prefs[k], nearest_neighbor_order(inst, prefs[k].w1, prefs[k].w2), cfg, rng,
                       archives[static_cast<std::size_t>(k)]);
  };
  const int workers = std::min(cfg.jobs, K);
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      for (int k = t; k < K; k += workers) work(k);
    });
  for (auto& th : pool) th.join();
  for (int k = 0; k < K; ++k) {
    auto& run = runs[static_cast<std::size_t>(k)];
    front.archive.merge(archives[static_cast<std::size_t>(k)]);
    front.per_preference[static_cast<std::size_t>(k)] = std::move(run.solution);
    front.multipliers.lambdas[k] = run.final_lambda;
    front.evaluations += run.evaluations;
  }
  return front;
}

}  // namespace paretour
