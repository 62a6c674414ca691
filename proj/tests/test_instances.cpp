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

#include "paretour/instances.hpp"

#include <doctest.h>

#include <set>

using namespace paretour;

TEST_CASE("euclidean generator") {
  const auto a = gen_euclidean(30, RngSeed{9});
  const auto b = gen_euclidean(30, RngSeed{9});
  CHECK(a.coords == b.coords);
  CHECK_FALSE(a.coords == gen_euclidean(30, RngSeed{10}).coords);

  const auto big = gen_euclidean(1000, RngSeed{4});
  CHECK((big.coords.array() >= 0.0).all());
  CHECK((big.coords.array() < 1.0).all());

  const auto huge = gen_euclidean(10000, RngSeed{8});
  for (int k = 0; k < 4; ++k) {
    const double mean = huge.coords.col(k).mean();
    CHECK(mean > 0.49);
    CHECK(mean < 0.51);
  }
  CHECK_THROWS_AS(gen_euclidean(1, RngSeed{0}), InvalidInput);
}

TEST_CASE("grid maps") {
  const auto empty = gen_gridmap(10, 8, 0.0, RngSeed{1});
  CHECK(empty.free_count() == 80);
  CHECK(empty.width() == 10);
  CHECK(empty.height() == 8);

  const auto a = gen_gridmap(20, 20, 0.2, RngSeed{3});
  CHECK(a.occupancy().cwiseEqual(gen_gridmap(20, 20, 0.2, RngSeed{3}).occupancy()).all());

  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto map = gen_gridmap(20, 20, 0.2, RngSeed{s});
    const auto cells = map.free_cells();
    REQUIRE_FALSE(cells.empty());
    const auto d = oracle::dijkstra(map, cells.front());
    for (const auto& c : cells) CHECK(d[static_cast<std::size_t>(c.row * 20 + c.col)] >= 0);
  }
  CHECK_THROWS_AS(gen_gridmap(4, 10, 0.1, RngSeed{0}), InvalidInput);
  CHECK_THROWS_AS(gen_gridmap(10, 10, 1.0, RngSeed{0}), InvalidInput);
}

TEST_CASE("point sampling") {
  const auto map = gen_gridmap(12, 12, 0.25, RngSeed{2});
  const auto all = sample_poi(map, map.free_count(), RngSeed{5});
  std::set<std::pair<int, int>> got, want;
  for (const auto& c : all) got.insert({c.row, c.col});
  for (const auto& c : map.free_cells()) want.insert({c.row, c.col});
  CHECK(got == want);
  CHECK(all.size() == got.size());
  CHECK_THROWS_AS(sample_poi(map, map.free_count() + 1, RngSeed{5}), InfeasibleInstance);
}

TEST_CASE("A* path lengths") {
  GridMap map(5, 5);
  CHECK(astar_path_length(map, {0, 0}, {0, 4}) == 4);
  CHECK(astar_path_length(map, {2, 2}, {2, 2}) == 0);

  // Full wall with one gap.
  GridMap wall(9, 9);
  for (int r = 0; r < 9; ++r)
    if (r != 7) wall.set_obstacle({r, 4}, true);
  std::vector<Cell> pts;
  for (int r = 0; r < 9; r += 2)
    for (int c = 0; c < 9; c += 3)
      if (wall.is_free({r, c})) pts.push_back({r, c});
  const auto a1 = apsp_astar(wall, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto d = oracle::dijkstra(wall, pts[i]);
    for (std::size_t j = 0; j < pts.size(); ++j)
      CHECK(a1(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
            d[static_cast<std::size_t>(pts[j].row * 9 + pts[j].col)]);
  }

  GridMap blocked(5, 5);
  for (int r = 0; r < 5; ++r) blocked.set_obstacle({r, 2}, true);
  CHECK_FALSE(astar_path_length(blocked, {0, 0}, {0, 4}).has_value());
  const std::vector<Cell> split{{0, 0}, {0, 4}};
  CHECK_THROWS_AS(apsp_astar(blocked, split), InfeasibleInstance);
  const std::vector<Cell> on_wall{{0, 0}, {0, 2}};
  CHECK_THROWS_AS(apsp_astar(blocked, on_wall), InvalidInput);
}

TEST_CASE("A* agrees with Dijkstra on random maps") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto map = gen_gridmap(25, 25, 0.3, RngSeed{s});
    const auto pts = sample_poi(map, 15, RngSeed{s + 50});
    const auto a1 = apsp_astar(map, pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto d = oracle::dijkstra(map, pts[i]);
      for (std::size_t j = 0; j < pts.size(); ++j)
        CHECK(a1(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
              d[static_cast<std::size_t>(pts[j].row * 25 + pts[j].col)]);
    }
  }
}

TEST_CASE("node features") {
  Eigen::MatrixXd a(3, 3);
  a << 0, 1, 2, 1, 0, 4, 2, 4, 0;
  const auto f = node_features(a);
  CHECK(f.stats(0, 0) == 3.0);
  CHECK(f.stats(0, 1) == 1.0);
  CHECK(f.stats(0, 2) == 2.0);

  const Eigen::MatrixXd c = 2.5 * (Eigen::MatrixXd::Ones(5, 5) - Eigen::MatrixXd::Identity(5, 5));
  const auto fc = node_features(c);
  for (int i = 0; i < 5; ++i) {
    CHECK(fc.stats(i, 0) == 10.0);
    CHECK(fc.stats(i, 1) == 2.5);
    CHECK(fc.stats(i, 2) == 2.5);
  }

  const Eigen::MatrixXd r = gen_second_adjacency(12, RngSeed{4});
  const auto fr = node_features(r);
  for (int i = 0; i < 12; ++i) {
    double sum = 0, lo = 1e300, hi = -1e300;
    for (int j = 0; j < 12; ++j) {
      if (j == i) continue;
      sum += r(i, j);
      lo = std::min(lo, r(i, j));
      hi = std::max(hi, r(i, j));
    }
    CHECK(fr.stats(i, 0) == doctest::Approx(sum).epsilon(1e-14));
    CHECK(fr.stats(i, 1) == lo);
    CHECK(fr.stats(i, 2) == hi);
  }
  CHECK_THROWS_AS(node_features(Eigen::MatrixXd::Zero(1, 1)), InvalidInput);
}

TEST_CASE("coverage instances satisfy adjacency invariants") {
  const auto cov = gen_coverage(20, 20, 0.2, 25, RngSeed{6});
  CHECK(cov.points.size() == 25);
  CHECK_NOTHROW(validate_adjacency(cov.instance.a1, "a1"));
  CHECK_NOTHROW(validate_adjacency(cov.instance.a2, "a2"));
  CHECK(cov.instance.a1 == cov.instance.a1.transpose());
  const auto again = gen_coverage(20, 20, 0.2, 25, RngSeed{6});
  CHECK(again.instance.a1 == cov.instance.a1);
  CHECK(again.instance.a2 == cov.instance.a2);
}
