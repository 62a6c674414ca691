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

// Two-variable test problem with a concave Pareto front:
//   f1(x) = 1 - exp(-|x - c|^2),  f2(x) = 1 - exp(-|x + c|^2),  c = (1, 1)/sqrt(2)
// on the box [-1, 1]^2. Decomposition solves min |F| on each preference ray;
// linear scalarization minimizes a1*f1 + a2*f2 and can only reach the two
// ends of the front.

#ifndef PARETOUR_CONCAVE_HPP
#define PARETOUR_CONCAVE_HPP

#include "paretour/core.hpp"
#include "paretour/decomposition.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace paretour {

using ConcavePoint = Eigen::Vector2d;

/// Throws InvalidInput outside [-1, 1]^2.
ObjectiveVector eval_concave(const ConcavePoint& x);
/// Rows: gradients of f1 and f2.
Eigen::Matrix2d concave_jacobian(const ConcavePoint& x);

struct ConcaveConfig {
  double mu0 = 1.0;
  int doublings = 32;             // penalty schedule mu0 * 2^s, s = 0..doublings
  int max_iterations = 500;       // per penalty stage and start
  double stationarity = 1e-9;     // projected-gradient norm at convergence
  double g_tolerance = 1e-3;      // returned points satisfy g <= g_tolerance
  double target_fraction = 0.99;  // penalty acts on g above target_fraction * g_tolerance
};

struct ConcaveSolution {
  ConcavePoint x = ConcavePoint::Zero();
  ObjectiveVector f;
  double g = 0.0;
};

/// Minimizes |F(x)| + mu * max(0, g(F(x), w) - target)^2 over the box for an
/// increasing penalty mu, from 16 grid starts; returns the best start with
/// g <= g_tolerance. Throws NumericalFailure when no start qualifies.
ConcaveSolution solve_concave_preference(const PreferenceVector& w, const ConcaveConfig& cfg = {});

/// Multistart descent on a1*f1 + a2*f2 over the box.
ConcaveSolution linear_scalarization_concave(double a1, double a2, const ConcaveConfig& cfg = {});

/// Greedy leader clustering: a point joins the first cluster whose leader is
/// within `radius`, otherwise it leads a new one. Returns the cluster count.
int count_clusters(std::span<const ObjectiveVector> points, double radius);

/// Size of a greedily built subset whose members are pairwise farther
/// apart than `min_distance`.
int count_distinct(std::span<const ObjectiveVector> points, double min_distance);

struct ConcaveRow {
  std::string method;  // "decomposition" or "scalarization"
  double w_or_alpha = 0.0;  // w1 of the preference, or a1 of the weight pair
  ConcaveSolution solution;
};

struct ConcaveDemo {
  std::vector<ConcaveRow> rows;
  int decomposition_distinct = 0;    // pairwise distance > 0.02, after nondominated filtering
  int decomposition_interior = 0;    // both objectives in (0.05, 0.95)
  int scalarization_clusters = 0;    // leader clusters at radius 0.05
};

/// K preference solves and `weights` interior scalarization solves.
ConcaveDemo run_concave_demo(int K = 20, int weights = 100, const ConcaveConfig& cfg = {});

inline constexpr const char* kConcaveCsvHeader = "method,w_or_alpha,x1,x2,f1,f2";
void write_concave_csv(std::ostream& os, std::span<const ConcaveRow> rows);

}  // namespace paretour

#endif  // PARETOUR_CONCAVE_HPP
