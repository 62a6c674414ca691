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

// Instance generators: uniform Euclidean instances and the grid-map
// coverage pipeline (map, points of interest, A* path lengths, a random
// second metric), plus the per-city edge statistics used as node features.

#ifndef PARETOUR_INSTANCES_HPP
#define PARETOUR_INSTANCES_HPP

#include "paretour/core.hpp"
#include "paretour/random.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace paretour {

/// n cities with 4 independent uniform [0, 1) coordinates each.
EuclideanInstance gen_euclidean(int n, RngSeed seed);

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Occupancy grid, true = obstacle. Stored height x width (row, col).
class GridMap {
 public:
  using Occupancy = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

  GridMap(int width, int height);
  explicit GridMap(Occupancy occupancy);

  int width() const { return static_cast<int>(occupancy_.cols()); }
  int height() const { return static_cast<int>(occupancy_.rows()); }
  bool in_bounds(Cell c) const { return c.row >= 0 && c.col >= 0 && c.row < height() && c.col < width(); }
  bool is_free(Cell c) const { return in_bounds(c) && !occupancy_(c.row, c.col); }
  void set_obstacle(Cell c, bool obstacle) { occupancy_(c.row, c.col) = obstacle; }
  const Occupancy& occupancy() const { return occupancy_; }

  int free_count() const;
  /// Free cells in row-major order.
  std::vector<Cell> free_cells() const;

 private:
  Occupancy occupancy_;
};

/// True iff the map has a free cell and its free cells form one
/// 4-connected component.
bool free_space_connected(const GridMap& map);

/// Cells are obstacles independently with probability `obstacle_density`;
/// maps are redrawn until the free space is connected (at most 1000 tries).
GridMap gen_gridmap(int width, int height, double obstacle_density, RngSeed seed);

/// n distinct free cells drawn uniformly without replacement.
std::vector<Cell> sample_poi(const GridMap& map, int n, RngSeed seed);

/// Shortest 4-connected unit-step path length via A* with the Manhattan
/// heuristic; nullopt when `goal` is unreachable.
std::optional<int> astar_path_length(const GridMap& map, Cell start, Cell goal);

/// All-pairs A* path lengths between `points`. Throws InfeasibleInstance
/// on an unreachable pair and InvalidInput on an obstacle point.
Eigen::MatrixXd apsp_astar(const GridMap& map, std::span<const Cell> points);

/// Euclidean distances between n uniform random points of the unit square.
Eigen::MatrixXd gen_second_adjacency(int n, RngSeed seed);

/// Per city: sum, min and max of its off-diagonal edge weights.
struct NodeFeatures {
  Eigen::MatrixX3d stats;  // columns: sum, min, max

  int size() const { return static_cast<int>(stats.rows()); }
};

NodeFeatures node_features(const Eigen::MatrixXd& a);

struct CoverageInstance {
  GridMap map;
  std::vector<Cell> points;
  AdjacencyInstance instance;
};

/// Map -> points of interest -> (A* lengths, random metric). Each stage
/// draws from its own substream of `seed`.
CoverageInstance gen_coverage(int width, int height, double obstacle_density, int n, RngSeed seed);

}  // namespace paretour

#endif  // PARETOUR_INSTANCES_HPP
