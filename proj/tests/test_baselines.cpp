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

#include "oracles.hpp"

#include "paretour/baselines.hpp"
#include "paretour/instances.hpp"
#include "paretour/neighborhood.hpp"

#include <doctest.h>

#include <limits>

using namespace paretour;

namespace {

// p is weighted-sum supported when some alpha in [0, 1] makes it a minimizer
// of alpha*f1 + (1 - alpha)*f2 over all points.
bool supported(const ObjectiveVector& p, const std::vector<ObjectiveVector>& all) {
  double lo = 0.0, hi = 1.0;
  for (const auto& q : all) {
    const double slope = (p.f1 - q.f1) - (p.f2 - q.f2);
    const double rhs = q.f2 - p.f2;
    if (std::abs(slope) < 1e-15) {
      if (rhs < -1e-12) return false;
    } else if (slope > 0) {
      hi = std::min(hi, rhs / slope + 1e-12);
    } else {
      lo = std::max(lo, rhs / slope - 1e-12);
    }
  }
  return lo <= hi;
}

}  // namespace

TEST_CASE("order crossover and inversion keep permutations") {
  Rng rng = make_rng(RngSeed{1});
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + uniform_index(rng, 20);
    const auto a = random_order(n, rng), b = random_order(n, rng);
    const auto c = order_crossover(a, b, rng);
    CHECK(is_permutation_of(c, n));
    auto m = a;
    inversion_mutation(m, rng);
    CHECK(is_permutation_of(m, n));
    CHECK(order_crossover(a, a, rng) == a);
  }
}

TEST_CASE("nondominated sorting and crowding") {
  Rng rng = make_rng(RngSeed{2});
  std::vector<ObjectiveVector> pts;
  for (int i = 0; i < 300; ++i) pts.push_back({std::floor(20 * uniform01(rng)), std::floor(20 * uniform01(rng))});
  const auto fronts = fast_nondominated_sort(pts);
  std::size_t total = 0;
  for (const auto& f : fronts) total += f.size();
  CHECK(total == pts.size());
  std::vector<ObjectiveVector> first;
  for (int i : fronts[0]) first.push_back(pts[static_cast<std::size_t>(i)]);
  CHECK(oracle::pairwise_front(first) == nondominated_filter(pts));
  // Members of a later front are dominated by someone in the previous one.
  for (std::size_t r = 1; r < fronts.size(); ++r)
    for (int i : fronts[r]) {
      bool dominated = false;
      for (int j : fronts[r - 1])
        dominated = dominated || dominates(pts[static_cast<std::size_t>(j)], pts[static_cast<std::size_t>(i)]);
      CHECK(dominated);
    }

  const std::vector<ObjectiveVector> line{{0, 4}, {1, 3}, {2, 2}, {4, 0}};
  const std::vector<int> idx{0, 1, 2, 3};
  const auto cd = crowding_distance(line, idx);
  CHECK(std::isinf(cd[0]));
  CHECK(std::isinf(cd[3]));
  CHECK(cd[1] == doctest::Approx(2.0 / 4 + 2.0 / 4));
  CHECK(cd[2] == doctest::Approx(3.0 / 4 + 3.0 / 4));
}

TEST_CASE("NSGA-II recovers five-city fronts") {
  int exact = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const BtspInstance inst(gen_euclidean(5, RngSeed{40 + s}));
    EvoConfig cfg;
    cfg.population = 20;
    cfg.evaluations = 4000;
    cfg.seed = RngSeed{s};
    const auto res = nsga2(inst, cfg);
    CHECK(res.evaluations <= static_cast<std::size_t>(cfg.evaluations));
    if (oracle::same_points(res.archive.objectives(), oracle::pairwise_front(oracle::all_tour_objectives(inst)))) ++exact;
  }
  CHECK(exact >= 19);
}

TEST_CASE("NSGA-II on an identical population without mutation") {
  const BtspInstance inst(gen_euclidean(8, RngSeed{3}));
  EvoConfig cfg;
  cfg.population = 10;
  cfg.evaluations = 500;
  cfg.mutation_rate = 0.0;
  const std::vector<Tour> same(10, Tour({0, 3, 1, 7, 2, 5, 4, 6}));
  const auto res = nsga2(inst, cfg, same);
  REQUIRE(res.archive.size() == 1);
  CHECK(res.archive.entries()[0].objectives == inst.evaluate(same[0]));
}

TEST_CASE("MOEA/D stays within the supported front") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const BtspInstance inst(gen_euclidean(5, RngSeed{60 + s}));
    const auto all = oracle::all_tour_objectives(inst);
    EvoConfig cfg;
    cfg.population = 20;
    cfg.evaluations = 4000;
    cfg.seed = RngSeed{s};
    const auto res = moead(inst, cfg, 20);
    for (const auto& p : res.archive.objectives()) CHECK(supported(p, all));
  }
}

TEST_CASE("MOEA/D extreme weights find single-objective minima") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const BtspInstance inst(gen_euclidean(6, RngSeed{80 + s}));
    double m1 = std::numeric_limits<double>::infinity(), m2 = m1;
    for (const auto& f : oracle::all_tour_objectives(inst)) m1 = std::min(m1, f.f1), m2 = std::min(m2, f.f2);
    EvoConfig cfg;
    cfg.population = 10;
    cfg.evaluations = 3000;
    cfg.seed = RngSeed{s};
    const auto res = moead(inst, cfg, 2);
    const auto pts = res.archive.objectives();
    CHECK(pts.front().f1 == doctest::Approx(m1).epsilon(1e-12));
    CHECK(pts.back().f2 == doctest::Approx(m2).epsilon(1e-12));
    CHECK(moead(inst, cfg, 2).archive.objectives() == pts);
  }
  CHECK_THROWS_AS(moead(BtspInstance(gen_euclidean(6, RngSeed{0})), EvoConfig{}, 1), InvalidInput);
}

TEST_CASE("weighted sum") {
  CHECK(uniform_weights(1)[0].a1 == 0.5);
  const auto w = uniform_weights(5);
  CHECK(w.front().a1 == 0.0);
  CHECK(w.back().a1 == 1.0);

  SearchConfig cfg;
  cfg.outer_rounds = 50;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const BtspInstance inst(gen_euclidean(6, RngSeed{100 + s}));
    double m1 = std::numeric_limits<double>::infinity();
    for (const auto& f : oracle::all_tour_objectives(inst)) m1 = std::min(m1, f.f1);
    const std::vector<WeightPair> first{{1.0, 0.0}};
    const auto a = weighted_sum(inst, first, cfg);
    CHECK(a.objectives().front().f1 == doctest::Approx(m1).epsilon(1e-12));
  }

  const auto e = gen_euclidean(12, RngSeed{7});
  const BtspInstance same{AdjacencyInstance(e.distances(0), e.distances(0))};
  const std::vector<WeightPair> half{{0.5, 0.5}}, full{{1.0, 0.0}};
  CHECK(weighted_sum(same, half, cfg).objectives().front().f1 ==
        doctest::Approx(weighted_sum(same, full, cfg).objectives().front().f1));

  const BtspInstance inst(gen_euclidean(20, RngSeed{9}));
  SearchConfig quick;
  quick.outer_rounds = 5;
  const auto hundred = weighted_sum(inst, uniform_weights(100), quick);
  const auto pts = hundred.objectives();
  CHECK(oracle::pairwise_front(pts) == pts);

  const std::vector<WeightPair> bad{{0.7, 0.7}};
  CHECK_THROWS_AS(weighted_sum(inst, bad, quick), InvalidInput);
}

TEST_CASE("evolutionary config validation") {
  EvoConfig odd;
  odd.population = 7;
  CHECK_THROWS_AS(odd.validate(), InvalidInput);
  EvoConfig small;
  small.population = 2;
  CHECK_THROWS_AS(small.validate(), InvalidInput);
  EvoConfig budget;
  budget.evaluations = 10;
  CHECK_THROWS_AS(budget.validate(), InvalidInput);
  EvoConfig rate;
  rate.crossover_rate = 1.5;
  CHECK_THROWS_AS(rate.validate(), InvalidInput);
}
