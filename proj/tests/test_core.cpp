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

#include "paretour/core.hpp"
#include "paretour/instances.hpp"
#include "paretour/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace paretour;

namespace {

EuclideanInstance from_points(std::initializer_list<std::array<double, 4>> rows) {
  CityCoords c(static_cast<Eigen::Index>(rows.size()), 4);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    for (int k = 0; k < 4; ++k) c(i, k) = r[static_cast<std::size_t>(k)];
    ++i;
  }
  return EuclideanInstance(c);
}

Eigen::MatrixXd random_symmetric(int n, Rng& rng) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = a(j, i) = uniform01(rng);
  return a;
}

}  // namespace

TEST_CASE("tour canonicalization and validation") {
  const Tour t({2, 0, 1});
  CHECK(t[0] == 0);
  CHECK(std::vector<int>(t.order().begin(), t.order().end()) == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(Tour({0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(Tour({0, 1, 3}), InvalidInput);
  CHECK(Tour::identity(4).size() == 4);
  CHECK(Tour({0, 1, 2, 3}).reversed()[1] == 3);
}

TEST_CASE("euclidean evaluation on closed-form shapes") {
  SUBCASE("unit square perimeter") {
    const auto inst = from_points({{0, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}, {0, 1, 0, 1}});
    const auto f = evaluate_euclidean(Tour({0, 1, 2, 3}), inst);
    CHECK(f.f1 == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(f.f2 == doctest::Approx(4.0).epsilon(1e-15));
  }
  SUBCASE("3-4-5 triangle") {
    const auto inst = from_points({{0, 0, 0, 0}, {3, 0, 3, 0}, {0, 4, 0, 4}});
    const auto f = evaluate_euclidean(Tour({0, 1, 2}), inst);
    CHECK(f.f1 == 12.0);
    CHECK(f.f2 == 12.0);
  }
  SUBCASE("tour length mismatch is rejected") {
    const auto inst = from_points({{0, 0, 0, 0}, {3, 0, 3, 0}, {0, 4, 0, 4}});
    CHECK_THROWS_AS(evaluate_euclidean(Tour({0, 1}), inst), InvalidInput);
  }
}

TEST_CASE("euclidean evaluation matches long-double Kahan recomputation") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto e = gen_euclidean(5, RngSeed{s});
    Rng rng = make_rng(RngSeed{s + 100});
    std::vector<int> order(5);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin() + 1, order.end(), rng);
    const auto f = evaluate_euclidean(Tour(order), e);
    CHECK(std::abs(f.f1 - static_cast<double>(oracle::euclidean_cost_ld(order, e.coords, 0))) < 1e-14);
    CHECK(std::abs(f.f2 - static_cast<double>(oracle::euclidean_cost_ld(order, e.coords, 1))) < 1e-14);
  }
}

TEST_CASE("adjacency evaluation") {
  Eigen::MatrixXd a(3, 3);
  a << 0, 1, 2, 1, 0, 3, 2, 3, 0;
  const AdjacencyInstance inst(a, a);
  const auto f = evaluate_adjacency(Tour({0, 1, 2}), inst);
  CHECK(f.f1 == 6.0);
  CHECK(f.f2 == 6.0);

  Eigen::MatrixXd two(2, 2);
  two << 0, 2.5, 2.5, 0;
  CHECK(evaluate_adjacency(Tour({0, 1}), AdjacencyInstance(two, two)).f1 == 5.0);

  Rng rng = make_rng(RngSeed{3});
  const Eigen::MatrixXd a1 = random_symmetric(6, rng), a2 = random_symmetric(6, rng);
  const BtspInstance six{AdjacencyInstance(a1, a2)};
  const auto tours = oracle::canonical_tours(6);
  CHECK(tours.size() == 60);
  for (const auto& t : tours) {
    const auto f = six.evaluate(Tour(t));
    const auto want = oracle::edge_sum(t, a1, a2);
    CHECK(f.f1 == doctest::Approx(want.f1).epsilon(1e-14));
    CHECK(f.f2 == doctest::Approx(want.f2).epsilon(1e-14));
  }
}

TEST_CASE("adjacency validation") {
  Eigen::MatrixXd ok(2, 2);
  ok << 0, 1, 1, 0;
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 2, 0;
  Eigen::MatrixXd diag(2, 2);
  diag << 1, 1, 1, 0;
  Eigen::MatrixXd neg(2, 2);
  neg << 0, -1, -1, 0;
  CHECK_NOTHROW(AdjacencyInstance(ok, ok));
  CHECK_THROWS_AS(AdjacencyInstance(ok, asym), InvalidInput);
  CHECK_THROWS_AS(AdjacencyInstance(diag, ok), InvalidInput);
  CHECK_THROWS_AS(AdjacencyInstance(neg, ok), InvalidInput);
  CHECK_THROWS_AS(AdjacencyInstance(ok, Eigen::MatrixXd::Zero(3, 3)), InvalidInput);
}

TEST_CASE("dominance") {
  CHECK(dominates({1, 1}, {2, 2}));
  CHECK_FALSE(dominates({1, 2}, {2, 1}));
  CHECK_FALSE(dominates({2, 1}, {1, 2}));
  CHECK_FALSE(dominates({1, 1}, {1, 1}));
  CHECK(dominates({1, 1}, {1, 2}));
}

TEST_CASE("archive insertion") {
  ParetoArchive a;
  CHECK(a.insert(Tour::identity(3), {1, 1}));
  CHECK_FALSE(a.insert(Tour::identity(3), {2, 2}));
  CHECK(a.size() == 1);

  ParetoArchive b;
  b.insert(Tour::identity(3), {1, 1});
  b.insert(Tour::identity(3), {2, 0.9});
  CHECK(b.size() == 2);
  b.insert(Tour::identity(3), {0.5, 0.5});
  REQUIRE(b.size() == 1);
  CHECK(b.entries()[0].objectives == ObjectiveVector{0.5, 0.5});

  const auto c = archive_insert(ParetoArchive{}, {Tour::identity(3), {3, 3}});
  CHECK(c.size() == 1);
}

TEST_CASE("archive matches pairwise oracle on streamed points") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng = make_rng(RngSeed{s});
    ParetoArchive a;
    std::vector<ObjectiveVector> pts;
    for (int i = 0; i < 200; ++i) {
      // Coarse grid so duplicates and ties occur.
      const ObjectiveVector p{std::floor(uniform01(rng) * 40) / 4, std::floor(uniform01(rng) * 40) / 4};
      pts.push_back(p);
      a.insert(Tour::identity(3), p);
      const auto objs = a.objectives();
      for (std::size_t k = 1; k < objs.size(); ++k) {
        CHECK(objs[k - 1].f1 < objs[k].f1);
        CHECK(objs[k - 1].f2 > objs[k].f2);
      }
    }
    CHECK(a.objectives() == oracle::pairwise_front(pts));
  }
}

TEST_CASE("nondominated filter") {
  const std::vector<ObjectiveVector> pts{{1, 2}, {2, 1}, {2, 2}};
  CHECK(nondominated_filter(pts) == std::vector<ObjectiveVector>{{1, 2}, {2, 1}});
  const std::vector<ObjectiveVector> one{{3, 4}};
  CHECK(nondominated_filter(one) == one);

  Rng rng = make_rng(RngSeed{77});
  std::vector<ObjectiveVector> many;
  for (int i = 0; i < 500; ++i) many.push_back({uniform01(rng), uniform01(rng)});
  CHECK(nondominated_filter(many) == oracle::pairwise_front(many));
}

TEST_CASE("archive merge is order-insensitive in objective space") {
  Rng rng = make_rng(RngSeed{5});
  ParetoArchive x, y;
  for (int i = 0; i < 100; ++i) x.insert(Tour::identity(3), {uniform01(rng), uniform01(rng)});
  for (int i = 0; i < 100; ++i) y.insert(Tour::identity(3), {uniform01(rng), uniform01(rng)});
  ParetoArchive xy = x, yx = y;
  xy.merge(y);
  yx.merge(x);
  CHECK(xy.objectives() == yx.objectives());
}
