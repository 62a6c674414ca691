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

#include "paretour/concave.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>

namespace paretour {

namespace {

const Eigen::Vector2d kCenter = Eigen::Vector2d::Constant(1.0 / std::numbers::sqrt2);

bool in_domain(const ConcavePoint& x) { return (x.array().abs() <= 1.0).all(); }

ConcavePoint project(const ConcavePoint& x) { return x.cwiseMax(-1.0).cwiseMin(1.0); }

struct BoxProblem {
  std::function<double(const ConcavePoint&)> value;
  std::function<Eigen::Vector2d(const ConcavePoint&)> gradient;
};

struct DescentResult {
  ConcavePoint x;
  bool converged = false;
};

// Projected descent on the box with Armijo backtracking. Uses a Newton step
// (finite-difference Hessian of the analytic gradient) when the Hessian is
// positive definite and falls back to steepest descent otherwise.
DescentResult descend(const BoxProblem& p, ConcavePoint x, int max_iterations, double tolerance) {
  constexpr double kArmijo = 1e-4;
  constexpr double kFd = 1e-6;
  x = project(x);
  auto stationarity = [&](const ConcavePoint& at, const Eigen::Vector2d& g) {
    return (at - project(at - g)).norm();
  };
  for (int it = 0; it < max_iterations; ++it) {
    const Eigen::Vector2d g = p.gradient(x);
    if (stationarity(x, g) <= tolerance) return {x, true};

    Eigen::Matrix2d h;
    for (int i = 0; i < 2; ++i) {
      const Eigen::Vector2d e = Eigen::Vector2d::Unit(i) * kFd;
      h.col(i) = (p.gradient(x + e) - p.gradient(x - e)) / (2.0 * kFd);
    }
    h = 0.5 * (h + h.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(h);
    const auto lambda = eig.eigenvalues();

    std::vector<Eigen::Vector2d> directions;
    if (lambda.minCoeff() > 1e-12 * std::max(1.0, lambda.cwiseAbs().maxCoeff())) {
      const Eigen::Vector2d newton = -h.ldlt().solve(g);
      if (newton.dot(g) < 0.0) directions.push_back(newton);
    }
    directions.push_back(-g);

    const double fx = p.value(x);
    bool moved = false;
    for (const auto& d : directions) {
      for (double t = 1.0; t > 1e-16; t *= 0.5) {
        const ConcavePoint next = project(x + t * d);
        if ((next - x).squaredNorm() == 0.0) break;
        if (p.value(next) <= fx + kArmijo * g.dot(next - x)) {
          x = next;
          moved = true;
          break;
        }
      }
      if (moved) break;
    }
    if (!moved) return {x, stationarity(x, g) <= std::max(1e-6, 1e3 * tolerance)};
  }
  return {x, stationarity(x, p.gradient(x)) <= tolerance};
}

std::vector<ConcavePoint> grid_starts() {
  std::vector<ConcavePoint> starts;
  for (double a : {-0.75, -0.25, 0.25, 0.75})
    for (double b : {-0.75, -0.25, 0.25, 0.75}) starts.emplace_back(a, b);
  return starts;
}

ConcaveSolution describe(const ConcavePoint& x, const PreferenceVector* w) {
  ConcaveSolution s;
  s.x = x;
  s.f = eval_concave(x);
  s.g = w ? cone_constraint(s.f, *w) : 0.0;
  return s;
}

}  // namespace

ObjectiveVector eval_concave(const ConcavePoint& x) {
  if (!x.allFinite() || !in_domain(x)) throw InvalidInput("concave problem point outside [-1, 1]^2");
  return {1.0 - std::exp(-(x - kCenter).squaredNorm()), 1.0 - std::exp(-(x + kCenter).squaredNorm())};
}

Eigen::Matrix2d concave_jacobian(const ConcavePoint& x) {
  Eigen::Matrix2d jac;
  jac.row(0) = 2.0 * (x - kCenter).transpose() * std::exp(-(x - kCenter).squaredNorm());
  jac.row(1) = 2.0 * (x + kCenter).transpose() * std::exp(-(x + kCenter).squaredNorm());
  return jac;
}

ConcaveSolution solve_concave_preference(const PreferenceVector& w, const ConcaveConfig& cfg) {
  validate_preference(w);
  if (!(cfg.target_fraction > 0.0 && cfg.target_fraction <= 1.0))
    throw InvalidInput("target_fraction must be in (0, 1]");
  const Eigen::Vector2d wv = w.vec();
  const double target = cfg.target_fraction * cfg.g_tolerance;
  double mu = cfg.mu0;
  // ||F|| + mu * max(0, g - target)^2
  BoxProblem problem{
      [&](const ConcavePoint& x) {
        const Eigen::Vector2d f = eval_concave(project(x)).vec();
        const double excess = std::max(0.0, 1.0 - wv.dot(f) / f.norm() - target);
        return f.norm() + mu * excess * excess;
      },
      [&](const ConcavePoint& x) -> Eigen::Vector2d {
        const ConcavePoint px = project(x);
        const Eigen::Vector2d f = eval_concave(px).vec();
        const double j = f.norm();
        const double excess = std::max(0.0, 1.0 - wv.dot(f) / j - target);
        const Eigen::Vector2d d_norm = f / j;
        const Eigen::Vector2d d_g = -wv / j + wv.dot(f) * f / (j * j * j);
        return concave_jacobian(px).transpose() * (d_norm + 2.0 * mu * excess * d_g);
      }};

  bool found = false;
  double best_value = std::numeric_limits<double>::infinity();
  ConcaveSolution best;
  for (const auto& start : grid_starts()) {
    ConcavePoint x = start;
    DescentResult r;
    for (int s = 0; s <= cfg.doublings; ++s) {
      mu = cfg.mu0 * std::ldexp(1.0, s);
      r = descend(problem, x, cfg.max_iterations, cfg.stationarity * (1.0 + std::sqrt(mu)));
      x = r.x;
    }
    if (!r.converged) continue;
    const ConcaveSolution sol = describe(x, &w);
    const double value = problem.value(x);
    if (sol.g <= cfg.g_tolerance && value < best_value) {
      best_value = value;
      best = sol;
      found = true;
    }
  }
  if (!found) throw NumericalFailure("no start reached the preference cone within tolerance");
  return best;
}

ConcaveSolution linear_scalarization_concave(double a1, double a2, const ConcaveConfig& cfg) {
  if (!(a1 >= 0.0 && a2 >= 0.0) || std::abs(a1 + a2 - 1.0) > 1e-9)
    throw InvalidInput("scalarization weights must be nonnegative and sum to 1");
  const Eigen::Vector2d alpha(a1, a2);
  BoxProblem problem{[&](const ConcavePoint& x) { return alpha.dot(eval_concave(project(x)).vec()); },
                     [&](const ConcavePoint& x) -> Eigen::Vector2d {
                       return concave_jacobian(project(x)).transpose() * alpha;
                     }};
  bool found = false;
  double best_value = std::numeric_limits<double>::infinity();
  ConcaveSolution best;
  for (const auto& start : grid_starts()) {
    const DescentResult r = descend(problem, start, cfg.max_iterations * (cfg.doublings + 1), cfg.stationarity);
    if (!r.converged) continue;
    const double value = problem.value(r.x);
    if (value < best_value) {
      best_value = value;
      best = describe(r.x, nullptr);
      found = true;
    }
  }
  if (!found) throw NumericalFailure("scalarized descent did not converge from any start");
  return best;
}

int count_clusters(std::span<const ObjectiveVector> points, double radius) {
  std::vector<Eigen::Vector2d> leaders;
  for (const auto& p : points) {
    bool joined = false;
    for (const auto& l : leaders)
      if ((p.vec() - l).norm() <= radius) {
        joined = true;
        break;
      }
    if (!joined) leaders.push_back(p.vec());
  }
  return static_cast<int>(leaders.size());
}

int count_distinct(std::span<const ObjectiveVector> points, double min_distance) {
  std::vector<Eigen::Vector2d> kept;
  for (const auto& p : points) {
    bool far = true;
    for (const auto& k : kept)
      if ((p.vec() - k).norm() <= min_distance) {
        far = false;
        break;
      }
    if (far) kept.push_back(p.vec());
  }
  return static_cast<int>(kept.size());
}

ConcaveDemo run_concave_demo(int K, int weights, const ConcaveConfig& cfg) {
  ConcaveDemo demo;
  std::vector<ObjectiveVector> decomposition;
  for (const auto& w : generate_preferences(K)) {
    demo.rows.push_back({"decomposition", w.w1, solve_concave_preference(w, cfg)});
    decomposition.push_back(demo.rows.back().solution.f);
  }
  std::vector<ObjectiveVector> scalarization;
  for (int i = 1; i <= weights; ++i) {
    const double a1 = static_cast<double>(i) / (weights + 1);
    demo.rows.push_back({"scalarization", a1, linear_scalarization_concave(a1, 1.0 - a1, cfg)});
    scalarization.push_back(demo.rows.back().solution.f);
  }
  const auto front = nondominated_filter(decomposition);
  demo.decomposition_distinct = count_distinct(front, 0.02);
  for (const auto& f : front)
    if (f.f1 > 0.05 && f.f1 < 0.95 && f.f2 > 0.05 && f.f2 < 0.95) ++demo.decomposition_interior;
  demo.scalarization_clusters = count_clusters(scalarization, 0.05);
  return demo;
}

void write_concave_csv(std::ostream& os, std::span<const ConcaveRow> rows) {
  os << kConcaveCsvHeader << '\n';
  const auto old = os.precision(12);
  for (const auto& r : rows) {
    os << r.method << ',' << r.w_or_alpha << ',' << r.solution.x[0] << ',' << r.solution.x[1] << ','
       << r.solution.f.f1 << ',' << r.solution.f.f2 << '\n';
  }
  os.precision(old);
}

}  // namespace paretour
