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

#include "paretour/baselines.hpp"

#include "paretour/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace paretour {

void EvoConfig::validate() const {
  if (population < 4 || population % 2 != 0) throw InvalidInput("population must be even and >= 4");
  if (evaluations < population) throw InvalidInput("evaluation budget must be >= population");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) throw InvalidInput("crossover_rate must lie in [0, 1]");
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) throw InvalidInput("mutation_rate must lie in [0, 1]");
  if (neighborhood_T < 1) throw InvalidInput("neighborhood_T must be >= 1");
}

std::vector<int> order_crossover(std::span<const int> a, std::span<const int> b, Rng& rng) {
  const int n = static_cast<int>(a.size());
  int lo = uniform_index(rng, n);
  int hi = uniform_index(rng, n);
  if (lo > hi) std::swap(lo, hi);
  std::vector<int> child(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int p = lo; p <= hi; ++p) {
    child[static_cast<std::size_t>(p)] = a[static_cast<std::size_t>(p)];
    used[static_cast<std::size_t>(a[static_cast<std::size_t>(p)])] = 1;
  }
  int write = (hi + 1) % n;
  for (int s = 0; s < n; ++s) {
    const int city = b[static_cast<std::size_t>((hi + 1 + s) % n)];
    if (used[static_cast<std::size_t>(city)]) continue;
    child[static_cast<std::size_t>(write)] = city;
    write = (write + 1) % n;
  }
  std::rotate(child.begin(), std::find(child.begin(), child.end(), 0), child.end());
  return child;
}

void inversion_mutation(std::vector<int>& order, Rng& rng) {
  const int n = static_cast<int>(order.size());
  if (n < 3) return;
  int i = 1 + uniform_index(rng, n - 1);
  int j = 1 + uniform_index(rng, n - 1);
  if (i > j) std::swap(i, j);
  std::reverse(order.begin() + i, order.begin() + j + 1);
}

std::vector<std::vector<int>> fast_nondominated_sort(std::span<const ObjectiveVector> points) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<int>> dominated_by_me(static_cast<std::size_t>(n));
  std::vector<int> domination_count(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> fronts(1);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (dominates(points[static_cast<std::size_t>(p)], points[static_cast<std::size_t>(q)]))
        dominated_by_me[static_cast<std::size_t>(p)].push_back(q);
      else if (dominates(points[static_cast<std::size_t>(q)], points[static_cast<std::size_t>(p)]))
        ++domination_count[static_cast<std::size_t>(p)];
    }
    if (domination_count[static_cast<std::size_t>(p)] == 0) fronts[0].push_back(p);
  }
  for (std::size_t f = 0; !fronts[f].empty(); ++f) {
    std::vector<int> next;
    for (int p : fronts[f])
      for (int q : dominated_by_me[static_cast<std::size_t>(p)])
        if (--domination_count[static_cast<std::size_t>(q)] == 0) next.push_back(q);
    fronts.push_back(std::move(next));
  }
  fronts.pop_back();
  return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> points, std::span<const int> front) {
  const std::size_t m = front.size();
  std::vector<double> dist(m, 0.0);
  if (m <= 2) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
    return dist;
  }
  std::vector<std::size_t> idx(m);
  for (int obj = 0; obj < 2; ++obj) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto value = [&](std::size_t i) { return points[static_cast<std::size_t>(front[i])][obj]; };
    std::stable_sort(idx.begin(), idx.end(), [&](auto x, auto y) { return value(x) < value(y); });
    dist[idx.front()] = dist[idx.back()] = std::numeric_limits<double>::infinity();
    const double span = value(idx.back()) - value(idx.front());
    if (span <= 0.0) continue;
    for (std::size_t r = 1; r + 1 < m; ++r) dist[idx[r]] += (value(idx[r + 1]) - value(idx[r - 1])) / span;
  }
  return dist;
}

namespace {

struct Individual {
  std::vector<int> order;
  ObjectiveVector f;
};

std::vector<ObjectiveVector> objectives_of(const std::vector<Individual>& pop) {
  std::vector<ObjectiveVector> out;
  out.reserve(pop.size());
  for (const auto& ind : pop) out.push_back(ind.f);
  return out;
}

ObjectiveVector best_values(const std::vector<Individual>& pop) {
  ObjectiveVector best{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (const auto& ind : pop) {
    best.f1 = std::min(best.f1, ind.f.f1);
    best.f2 = std::min(best.f2, ind.f.f2);
  }
  return best;
}

std::vector<int> make_child(const std::vector<int>& a, const std::vector<int>& b, const EvoConfig& cfg, Rng& rng) {
  std::vector<int> child = uniform01(rng) < cfg.crossover_rate ? order_crossover(a, b, rng) : a;
  if (uniform01(rng) < cfg.mutation_rate) inversion_mutation(child, rng);
  return child;
}

ParetoArchive archive_of(const std::vector<Individual>& pop, std::span<const int> members) {
  ParetoArchive archive;
  for (int i : members) archive.insert(Tour(pop[static_cast<std::size_t>(i)].order), pop[static_cast<std::size_t>(i)].f);
  return archive;
}

}  // namespace

EvoResult nsga2(const BtspInstance& inst, const EvoConfig& cfg, std::span<const Tour> initial) {
  cfg.validate();
  const int n = inst.size();
  const int P = cfg.population;
  Rng rng = make_rng(cfg.seed);
  EvoResult result;

  std::vector<Individual> pop;
  for (int i = 0; i < P; ++i) {
    std::vector<int> order;
    if (!initial.empty()) {
      const Tour& t = initial[static_cast<std::size_t>(i) % initial.size()];
      if (t.size() != n) throw InvalidInput("initial tour size does not match the instance");
      order.assign(t.order().begin(), t.order().end());
    } else {
      order = random_order(n, rng);
    }
    const ObjectiveVector f = inst.evaluate_order(order);
    pop.push_back({std::move(order), f});
  }
  result.evaluations = P;
  result.best_per_generation.push_back(best_values(pop));

  std::vector<int> rank(static_cast<std::size_t>(P), 0);
  std::vector<double> crowd(static_cast<std::size_t>(P), 0.0);
  auto assign_rank_crowding = [&](const std::vector<Individual>& members) {
    const auto objs = objectives_of(members);
    const auto fronts = fast_nondominated_sort(objs);
    for (std::size_t r = 0; r < fronts.size(); ++r) {
      const auto cd = crowding_distance(objs, fronts[r]);
      for (std::size_t i = 0; i < fronts[r].size(); ++i) {
        rank[static_cast<std::size_t>(fronts[r][i])] = static_cast<int>(r);
        crowd[static_cast<std::size_t>(fronts[r][i])] = cd[i];
      }
    }
  };
  auto tournament = [&]() -> const Individual& {
    const int a = uniform_index(rng, P);
    const int b = uniform_index(rng, P);
    const auto ua = static_cast<std::size_t>(a);
    const auto ub = static_cast<std::size_t>(b);
    if (rank[ua] != rank[ub]) return pop[rank[ua] < rank[ub] ? ua : ub];
    return pop[crowd[ua] >= crowd[ub] ? ua : ub];
  };
  assign_rank_crowding(pop);

  while (result.evaluations + P <= cfg.evaluations) {
    std::vector<Individual> merged = pop;
    for (int i = 0; i < P; i += 2) {
      const Individual& a = tournament();
      const Individual& b = tournament();
      for (auto child : {make_child(a.order, b.order, cfg, rng), make_child(b.order, a.order, cfg, rng)}) {
        const ObjectiveVector f = inst.evaluate_order(child);
        merged.push_back({std::move(child), f});
      }
    }
    result.evaluations += P;

    // Survivors come from distinct objective vectors first; repeats only fill leftover slots.
    std::vector<std::size_t> order(merged.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
      const auto& fx = merged[x].f;
      const auto& fy = merged[y].f;
      return fx.f1 < fy.f1 || (fx.f1 == fy.f1 && fx.f2 < fy.f2);
    });
    std::vector<std::size_t> distinct, repeats;
    for (std::size_t r = 0; r < order.size(); ++r) {
      const bool repeat = r > 0 && merged[order[r]].f == merged[order[r - 1]].f;
      (repeat ? repeats : distinct).push_back(order[r]);
    }
    std::sort(distinct.begin(), distinct.end());
    std::sort(repeats.begin(), repeats.end());

    std::vector<ObjectiveVector> objs;
    for (std::size_t i : distinct) objs.push_back(merged[i].f);
    std::vector<Individual> next;
    for (const auto& front : fast_nondominated_sort(objs)) {
      if (next.size() + front.size() <= static_cast<std::size_t>(P)) {
        for (int i : front) next.push_back(std::move(merged[distinct[static_cast<std::size_t>(i)]]));
        continue;
      }
      const auto cd = crowding_distance(objs, front);
      std::vector<std::size_t> idx(front.size());
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      std::stable_sort(idx.begin(), idx.end(), [&](auto x, auto y) { return cd[x] > cd[y]; });
      for (std::size_t r = 0; next.size() < static_cast<std::size_t>(P); ++r)
        next.push_back(std::move(merged[distinct[static_cast<std::size_t>(front[idx[r]])]]));
      break;
    }
    for (std::size_t r = 0; next.size() < static_cast<std::size_t>(P); ++r) next.push_back(std::move(merged[repeats[r]]));
    pop = std::move(next);
    assign_rank_crowding(pop);
    result.best_per_generation.push_back(best_values(pop));
  }

  const auto fronts = fast_nondominated_sort(objectives_of(pop));
  result.archive = archive_of(pop, fronts.front());
  return result;
}

EvoResult moead(const BtspInstance& inst, const EvoConfig& cfg, int K) {
  cfg.validate();
  if (K < 2) throw InvalidInput("moead needs K >= 2");
  if (cfg.evaluations < K) throw InvalidInput("evaluation budget must cover the K initial subproblems");
  const int n = inst.size();
  Rng rng = make_rng(cfg.seed);
  EvoResult result;

  std::vector<WeightPair> weights = uniform_weights(K);
  const int T = std::min(cfg.neighborhood_T, K);
  std::vector<std::vector<int>> neighbors(static_cast<std::size_t>(K));
  for (int i = 0; i < K; ++i) {
    std::vector<int> idx(static_cast<std::size_t>(K));
    std::iota(idx.begin(), idx.end(), 0);
    auto dist = [&](int j) {
      return std::hypot(weights[static_cast<std::size_t>(i)].a1 - weights[static_cast<std::size_t>(j)].a1,
                        weights[static_cast<std::size_t>(i)].a2 - weights[static_cast<std::size_t>(j)].a2);
    };
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return dist(x) < dist(y); });
    idx.resize(static_cast<std::size_t>(T));
    neighbors[static_cast<std::size_t>(i)] = std::move(idx);
  }
  auto scalar = [&](int j, const ObjectiveVector& f) {
    return weights[static_cast<std::size_t>(j)].a1 * f.f1 + weights[static_cast<std::size_t>(j)].a2 * f.f2;
  };

  std::vector<Individual> pop;
  for (int i = 0; i < K; ++i) {
    auto order = random_order(n, rng);
    const ObjectiveVector f = inst.evaluate_order(order);
    pop.push_back({std::move(order), f});
  }
  result.evaluations = K;
  result.best_per_generation.push_back(best_values(pop));

  while (result.evaluations < cfg.evaluations) {
    for (int i = 0; i < K && result.evaluations < cfg.evaluations; ++i) {
      const auto& nb = neighbors[static_cast<std::size_t>(i)];
      const int p = nb[static_cast<std::size_t>(uniform_index(rng, T))];
      const int q = nb[static_cast<std::size_t>(uniform_index(rng, T))];
      Individual child;
      child.order = make_child(pop[static_cast<std::size_t>(p)].order, pop[static_cast<std::size_t>(q)].order, cfg, rng);
      child.f = inst.evaluate_order(child.order);
      ++result.evaluations;
      for (int j : nb)
        if (scalar(j, child.f) < scalar(j, pop[static_cast<std::size_t>(j)].f)) pop[static_cast<std::size_t>(j)] = child;
    }
    result.best_per_generation.push_back(best_values(pop));
  }

  const auto fronts = fast_nondominated_sort(objectives_of(pop));
  result.archive = archive_of(pop, fronts.front());
  return result;
}

std::vector<WeightPair> uniform_weights(int count) {
  if (count < 1) throw InvalidInput("weight count must be >= 1");
  if (count == 1) return {WeightPair{0.5, 0.5}};
  std::vector<WeightPair> out;
  for (int i = 0; i < count; ++i) {
    const double a1 = static_cast<double>(i) / (count - 1);
    out.push_back({a1, 1.0 - a1});
  }
  return out;
}

ParetoArchive weighted_sum(const BtspInstance& inst, std::span<const WeightPair> alphas, const SearchConfig& cfg) {
  cfg.validate();
  for (const auto& a : alphas) {
    if (!(a.a1 >= 0.0 && a.a2 >= 0.0) || std::abs(a.a1 + a.a2 - 1.0) > 1e-9)
      throw InvalidInput("scalarization weights must be nonnegative and sum to 1");
  }
  ParetoArchive archive;
  const long budget = static_cast<long>(cfg.outer_rounds) * cfg.inner_moves;
  for (std::size_t w = 0; w < alphas.size(); ++w) {
    const WeightPair a = alphas[w];
    Rng rng = make_rng(derive_seed(cfg.seed, w));
    TourImprover improver(inst, [a](const ObjectiveVector& f) { return a.a1 * f.f1 + a.a2 * f.f2; });
    std::vector<SearchState> chains;
    chains.push_back(improver.start(nearest_neighbor_order(inst, a.a1, a.a2)));
    for (int r = 1; r < cfg.restarts; ++r) chains.push_back(improver.start(random_order(inst.size(), rng)));
    for (auto& chain : chains) {
      improver.random_moves(chain, budget, rng);
      improver.polish(chain, rng);
    }
    const auto& best = *std::min_element(chains.begin(), chains.end(),
                                         [](const auto& x, const auto& y) { return x.cost < y.cost; });
    archive.insert(Tour(best.order), best.objectives);
  }
  return archive;
}

}  // namespace paretour
