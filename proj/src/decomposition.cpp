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

#include "paretour/decomposition.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <string>

namespace paretour {

PreferenceVector PreferenceVector::from_angle(double radians) {
  if (!(radians >= 0.0 && radians <= std::numbers::pi / 2))
    throw InvalidInput("preference angle must lie in [0, pi/2]");
  return {std::cos(radians), std::sin(radians)};
}

void validate_preference(const PreferenceVector& w) {
  if (!(w.w1 >= 0.0 && w.w2 >= 0.0)) throw InvalidInput("preference components must be >= 0");
  if (std::abs(std::hypot(w.w1, w.w2) - 1.0) > 1e-12) throw InvalidInput("preference must be unit norm");
}

PreferenceSet::PreferenceSet(std::vector<PreferenceVector> prefs) : prefs_(std::move(prefs)) {
  if (prefs_.empty()) throw InvalidInput("preference set needs K >= 1");
  for (std::size_t k = 0; k < prefs_.size(); ++k) {
    validate_preference(prefs_[k]);
    if (k > 0 && !(prefs_[k].angle() > prefs_[k - 1].angle()))
      throw InvalidInput("preference angles must be strictly increasing");
  }
}

PreferenceSet generate_preferences(int K) {
  if (K < 1) throw InvalidInput("generate_preferences needs K >= 1");
  std::vector<PreferenceVector> prefs;
  prefs.reserve(static_cast<std::size_t>(K));
  const double step = (std::numbers::pi / 2) / K;
  for (int k = 1; k <= K; ++k) prefs.push_back(PreferenceVector::from_angle((k - 0.5) * step));
  return PreferenceSet(std::move(prefs));
}

MultiplierState MultiplierState::uniform(int K, const MultiplierConfig& cfg, double initial) {
  MultiplierState s;
  s.alpha = cfg.alpha;
  s.lambda_min = cfg.lambda_min;
  s.lambda_max = cfg.lambda_max;
  s.validate();
  s.lambdas = Eigen::VectorXd::Constant(K, std::clamp(initial, cfg.lambda_min, cfg.lambda_max));
  return s;
}

void MultiplierState::validate() const {
  if (!(alpha > 0.0)) throw InvalidInput("multiplier ascent rate must be > 0");
  if (!(lambda_min >= 0.0 && lambda_min <= lambda_max))
    throw InvalidInput("multiplier bounds need 0 <= lambda_min <= lambda_max");
}

MultiplierState update_multipliers(const MultiplierState& state,
                                   std::span<const std::vector<double>> batch_g) {
  if (batch_g.size() != static_cast<std::size_t>(state.lambdas.size()))
    throw InvalidInput("batch has " + std::to_string(batch_g.size()) + " preference lists, expected " +
                       std::to_string(state.lambdas.size()));
  MultiplierState next = state;
  for (Eigen::Index k = 0; k < state.lambdas.size(); ++k) {
    const auto& g = batch_g[static_cast<std::size_t>(k)];
    if (g.empty()) throw InvalidInput("empty constraint list for a preference");
    const double sum = std::accumulate(g.begin(), g.end(), 0.0);
    next.lambdas[k] = std::clamp(state.lambdas[k] + state.alpha * sum, state.lambda_min, state.lambda_max);
  }
  return next;
}

}  // namespace paretour
