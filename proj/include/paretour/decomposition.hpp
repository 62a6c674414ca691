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

// Preference-cone decomposition of the bi-objective space. Each preference
// w_k is a unit ray; a cost vector F belongs to cone k when the cosine gap
// g(F, w_k) = 1 - w_k.F / |F| vanishes. The constrained surrogate
// min |F| s.t. g <= 0 is relaxed into the reward |F| + lambda_k * g, and the
// multipliers lambda_k follow a clamped ascent on the observed violations.

#ifndef PARETOUR_DECOMPOSITION_HPP
#define PARETOUR_DECOMPOSITION_HPP

#include "paretour/core.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <span>
#include <vector>

namespace paretour {

struct PreferenceVector {
  double w1 = 0.0;
  double w2 = 0.0;

  /// Unit vector at `radians` from the f1 axis. Requires angle in [0, pi/2].
  static PreferenceVector from_angle(double radians);

  Eigen::Vector2d vec() const { return {w1, w2}; }
  double angle() const { return std::atan2(w2, w1); }
};

/// Throws InvalidInput unless w is nonnegative and unit-norm within 1e-12.
void validate_preference(const PreferenceVector& w);

/// K preferences with strictly increasing angles.
class PreferenceSet {
 public:
  explicit PreferenceSet(std::vector<PreferenceVector> prefs);

  int size() const { return static_cast<int>(prefs_.size()); }
  const PreferenceVector& operator[](int k) const { return prefs_[static_cast<std::size_t>(k)]; }
  auto begin() const { return prefs_.begin(); }
  auto end() const { return prefs_.end(); }

 private:
  std::vector<PreferenceVector> prefs_;
};

/// Midpoint rule on the quarter circle: phi_k = (k - 1/2) * (pi/2) / K.
PreferenceSet generate_preferences(int K);

/// J(F) = |F|_2.
template <typename Derived>
typename Derived::Scalar surrogate_objective(const Eigen::MatrixBase<Derived>& f) {
  return f.norm();
}

/// g(F, w) = 1 - w.F / |F|_2. Throws InvalidInput when |F| = 0.
template <typename DerivedF, typename DerivedW>
typename DerivedF::Scalar cone_constraint(const Eigen::MatrixBase<DerivedF>& f,
                                          const Eigen::MatrixBase<DerivedW>& w) {
  using Scalar = typename DerivedF::Scalar;
  const Scalar norm = f.norm();
  if (!(norm > Scalar(0))) throw InvalidInput("cone constraint undefined for a zero objective vector");
  return Scalar(1) - w.template cast<Scalar>().dot(f) / norm;
}

/// L = J(F) + lambda * g(F, w).
template <typename DerivedF, typename DerivedW>
typename DerivedF::Scalar lagrangian_reward(const Eigen::MatrixBase<DerivedF>& f,
                                            const Eigen::MatrixBase<DerivedW>& w,
                                            typename DerivedF::Scalar lambda) {
  return surrogate_objective(f) + lambda * cone_constraint(f, w);
}

inline double surrogate_objective(const ObjectiveVector& f) { return std::hypot(f.f1, f.f2); }
inline double cone_constraint(const ObjectiveVector& f, const PreferenceVector& w) {
  return cone_constraint(f.vec(), w.vec());
}
inline double lagrangian_reward(const ObjectiveVector& f, const PreferenceVector& w, double lambda) {
  return lagrangian_reward(f.vec(), w.vec(), lambda);
}

/// g(F, w), taking 0 for F = 0 (a tour can only have zero cost on an
/// all-zero instance).
inline double safe_cone_constraint(const ObjectiveVector& f, const PreferenceVector& w) {
  if (f.f1 == 0.0 && f.f2 == 0.0) return 0.0;
  return cone_constraint(f, w);
}

struct MultiplierConfig {
  double alpha = 0.05;
  double lambda_min = 0.0;
  double lambda_max = 50.0;
};

/// One multiplier per preference plus the ascent rate and clamp bounds.
struct MultiplierState {
  Eigen::VectorXd lambdas;
  double alpha = 0.05;
  double lambda_min = 0.0;
  double lambda_max = 50.0;

  /// K multipliers at `initial` (clamped into the bounds).
  static MultiplierState uniform(int K, const MultiplierConfig& cfg = {}, double initial = 0.0);
  void validate() const;
};

/// lambda_k <- clamp(lambda_k + alpha * sum_j g_kj, lambda_min, lambda_max).
/// `batch_g` holds one non-empty list of constraint values per preference.
MultiplierState update_multipliers(const MultiplierState& state,
                                   std::span<const std::vector<double>> batch_g);

}  // namespace paretour

#endif  // PARETOUR_DECOMPOSITION_HPP
