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

#include "paretour/instances.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

namespace paretour {

EuclideanInstance gen_euclidean(int n, RngSeed seed) {
  if (n < 2) throw InvalidInput("gen_euclidean needs n >= 2");
  Rng rng = make_rng(seed);
  CityCoords coords(n, 4);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < 4; ++c) coords(i, c) = uniform01(rng);
  return EuclideanInstance(std::move(coords));
}

GridMap::GridMap(int width, int height) {
  if (width < 1 || height < 1) throw InvalidInput("grid map dimensions must be positive");
  occupancy_ = Occupancy::Constant(height, width, false);
}

GridMap::GridMap(Occupancy occupancy) : occupancy_(std::move(occupancy)) {
  if (occupancy_.rows() < 1 || occupancy_.cols() < 1)
    throw InvalidInput("grid map dimensions must be positive");
}

int GridMap::free_count() const { return static_cast<int>((!occupancy_).count()); }

std::vector<Cell> GridMap::free_cells() const {
  std::vector<Cell> cells;
  for (int r = 0; r < height(); ++r)
    for (int c = 0; c < width(); ++c)
      if (!occupancy_(r, c)) cells.push_back({r, c});
  return cells;
}

namespace {

constexpr int kDr[4] = {-1, 1, 0, 0};
constexpr int kDc[4] = {0, 0, -1, 1};

}  // namespace

bool free_space_connected(const GridMap& map) {
  const auto cells = map.free_cells();
  if (cells.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(map.width() * map.height()), 0);
  auto index = [&](Cell c) { return static_cast<std::size_t>(c.row * map.width() + c.col); };
  std::vector<Cell> stack{cells.front()};
  seen[index(cells.front())] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    for (int d = 0; d < 4; ++d) {
      const Cell nb{c.row + kDr[d], c.col + kDc[d]};
      if (map.is_free(nb) && !seen[index(nb)]) {
        seen[index(nb)] = 1;
        ++reached;
        stack.push_back(nb);
      }
    }
  }
  return reached == cells.size();
}

GridMap gen_gridmap(int width, int height, double obstacle_density, RngSeed seed) {
  if (width < 5 || height < 5) throw InvalidInput("grid maps need width, height >= 5");
  if (!(obstacle_density >= 0.0 && obstacle_density < 1.0))
    throw InvalidInput("obstacle density must lie in [0, 1)");
  Rng rng = make_rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GridMap map(width, height);
    for (int r = 0; r < height; ++r)
      for (int c = 0; c < width; ++c) map.set_obstacle({r, c}, uniform01(rng) < obstacle_density);
    if (free_space_connected(map)) return map;
  }
  throw InfeasibleInstance("no map with connected free space in 1000 attempts");
}

std::vector<Cell> sample_poi(const GridMap& map, int n, RngSeed seed) {
  auto cells = map.free_cells();
  if (n < 0 || n > static_cast<int>(cells.size()))
    throw InfeasibleInstance("cannot sample " + std::to_string(n) + " points from " +
                             std::to_string(cells.size()) + " free cells");
  Rng rng = make_rng(seed);
  // Partial Fisher-Yates.
  for (int i = 0; i < n; ++i) {
    const int j = i + uniform_index(rng, static_cast<int>(cells.size()) - i);
    std::swap(cells[static_cast<std::size_t>(i)], cells[static_cast<std::size_t>(j)]);
  }
  cells.resize(static_cast<std::size_t>(n));
  return cells;
}

std::optional<int> astar_path_length(const GridMap& map, Cell start, Cell goal) {
  if (!map.is_free(start) || !map.is_free(goal)) return std::nullopt;
  if (start == goal) return 0;
  const int w = map.width();
  auto index = [w](Cell c) { return static_cast<std::size_t>(c.row * w + c.col); };
  auto heuristic = [&](Cell c) { return std::abs(c.row - goal.row) + std::abs(c.col - goal.col); };

  std::vector<int> best(static_cast<std::size_t>(w * map.height()), -1);
  std::vector<char> closed(best.size(), 0);
  // (f, g, cell index); ties on f prefer larger g (deeper nodes).
  using Node = std::tuple<int, int, int>;
  auto worse = [](const Node& a, const Node& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return std::get<2>(a) > std::get<2>(b);
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> open(worse);
  best[index(start)] = 0;
  open.emplace(heuristic(start), 0, static_cast<int>(index(start)));
  while (!open.empty()) {
    const auto [f, g, idx] = open.top();
    open.pop();
    if (closed[static_cast<std::size_t>(idx)]) continue;
    closed[static_cast<std::size_t>(idx)] = 1;
    const Cell c{idx / w, idx % w};
    if (c == goal) return g;
    for (int d = 0; d < 4; ++d) {
      const Cell nb{c.row + kDr[d], c.col + kDc[d]};
      if (!map.is_free(nb)) continue;
      const auto ni = index(nb);
      if (closed[ni]) continue;
      if (best[ni] < 0 || g + 1 < best[ni]) {
        best[ni] = g + 1;
        open.emplace(g + 1 + heuristic(nb), g + 1, static_cast<int>(ni));
      }
    }
  }
  return std::nullopt;
}

Eigen::MatrixXd apsp_astar(const GridMap& map, std::span<const Cell> points) {
  const int n = static_cast<int>(points.size());
  for (const Cell& p : points)
    if (!map.is_free(p)) throw InvalidInput("point of interest lies on an obstacle or off the map");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto len = astar_path_length(map, points[static_cast<std::size_t>(i)],
                                         points[static_cast<std::size_t>(j)]);
      if (!len) {
        throw InfeasibleInstance("points " + std::to_string(i) + " and " + std::to_string(j) +
                                 " are mutually unreachable");
      }
      a(i, j) = a(j, i) = static_cast<double>(*len);
    }
  }
  return a;
}

Eigen::MatrixXd gen_second_adjacency(int n, RngSeed seed) {
  if (n < 2) throw InvalidInput("gen_second_adjacency needs n >= 2");
  Rng rng = make_rng(seed);
  Eigen::MatrixX2d pts(n, 2);
  for (int i = 0; i < n; ++i) {
    pts(i, 0) = uniform01(rng);
    pts(i, 1) = uniform01(rng);
  }
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = a(j, i) = (pts.row(i) - pts.row(j)).norm();
  return a;
}

NodeFeatures node_features(const Eigen::MatrixXd& a) {
  const auto n = a.rows();
  if (n < 2 || a.cols() != n) throw InvalidInput("node_features needs a square matrix with n >= 2");
  NodeFeatures out{Eigen::MatrixX3d(n, 3)};
  for (Eigen::Index i = 0; i < n; ++i) {
    double sum = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      sum += a(i, j);
      lo = std::min(lo, a(i, j));
      hi = std::max(hi, a(i, j));
    }
    out.stats.row(i) << sum, lo, hi;
  }
  return out;
}

CoverageInstance gen_coverage(int width, int height, double obstacle_density, int n, RngSeed seed) {
  if (n < 2) throw InvalidInput("coverage instances need n >= 2");
  GridMap map = gen_gridmap(width, height, obstacle_density, derive_seed(seed, 0));
  auto points = sample_poi(map, n, derive_seed(seed, 1));
  Eigen::MatrixXd a1 = apsp_astar(map, points);
  Eigen::MatrixXd a2 = gen_second_adjacency(n, derive_seed(seed, 2));
  return {std::move(map), std::move(points), AdjacencyInstance(std::move(a1), std::move(a2))};
}

}  // namespace paretour
