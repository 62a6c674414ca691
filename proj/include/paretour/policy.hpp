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

// Preference-conditioned tour construction policy trained with REINFORCE.
//
// The actor builds a tour from city 0 one step at a time. At current city i
// every unvisited city j gets the score theta . phi(i, j, w) and the next
// city is drawn from the softmax of those scores. The feature vector is
//
//   [d1, d2, w1*d1, w2*d2, w2*d1, w1*d2,
//    mean1(j), min1(j), max1(j), mean2(j), min2(j), max2(j), 1]
//
// with per-instance min-max normalized edge costs d1 = d1(i, j), d2 and the
// node statistics of j computed on those normalized costs. Entries 2..5 are
// the preference-interaction terms; they are zeroed when preference features
// are disabled. A linear critic over (w, instance summary) supplies the
// baseline. Training alternates actor, critic and multiplier updates once
// per iteration over a K x B batch of rollouts.

#ifndef PARETOUR_POLICY_HPP
#define PARETOUR_POLICY_HPP

#include "paretour/core.hpp"
#include "paretour/decomposition.hpp"
#include "paretour/random.hpp"

#include <Eigen/Dense>

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace paretour {

inline constexpr int kPolicyFeatures = 13;
inline constexpr int kCriticFeatures = 9;

struct PolicyParams {
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(kPolicyFeatures);
  bool preference_features = true;

  std::string feature_schema() const { return preference_features ? "v1" : "v1-nopref"; }
};

struct CriticParams {
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(kCriticFeatures);
};

/// Normalized costs and node statistics the actor and critic read.
struct PolicyContext {
  int n = 0;
  Eigen::MatrixXd nd1;           // min-max normalized d1
  Eigen::MatrixXd nd2;           // min-max normalized d2
  Eigen::Matrix<double, Eigen::Dynamic, 6> node;  // mean/min/max of nd1, then nd2
  Eigen::Matrix<double, 6, 1> edge_summary;      // raw mean/min/max of d1, then d2
};

PolicyContext make_context(const BtspInstance& inst);

/// Feature vector of moving from `from` to `to` under preference w.
Eigen::Matrix<double, kPolicyFeatures, 1> policy_features(const PolicyContext& ctx, const PreferenceVector& w,
                                                          int from, int to, bool preference_features);

/// [w1, w2, mean/min/max of d1, mean/min/max of d2, n / 100].
Eigen::Matrix<double, kCriticFeatures, 1> critic_features(const PolicyContext& ctx, const PreferenceVector& w);

double critic_predict(const CriticParams& critic, const PolicyContext& ctx, const PreferenceVector& w);

/// Features of every candidate at one decoding step and the chosen row.
struct DecodeStep {
  Eigen::Matrix<double, Eigen::Dynamic, kPolicyFeatures> candidates;
  int chosen = 0;
};

struct Trajectory {
  Tour tour;
  double log_prob = 0.0;
  std::vector<DecodeStep> steps;
};

/// Samples a tour; log_prob is the sum of the chosen steps' log
/// probabilities. The step features are recorded in the trajectory.
Trajectory sample_tour(const PolicyParams& policy, const PolicyContext& ctx, const PreferenceVector& w, Rng& rng);

/// Argmax decoding (lowest index on ties).
Tour greedy_tour(const PolicyParams& policy, const PolicyContext& ctx, const PreferenceVector& w);

/// log p_theta(tour), recomputed from scratch.
double tour_log_probability(const PolicyParams& policy, const PolicyContext& ctx, const PreferenceVector& w,
                            const Tour& tour);

/// log p of a recorded trajectory under (possibly different) parameters.
double trajectory_log_probability(const Eigen::VectorXd& theta, const Trajectory& traj);

/// grad_theta log p of a recorded trajectory: sum over steps of
/// phi_chosen - E_softmax[phi].
Eigen::VectorXd log_prob_gradient(const Eigen::VectorXd& theta, const Trajectory& traj);

struct ReinforceSample {
  const Trajectory* trajectory = nullptr;
  double reward = 0.0;    // Lagrangian L
  double baseline = 0.0;  // critic prediction b
};

/// (1 / |batch|) * sum (L - b) * grad log p.
Eigen::VectorXd reinforce_gradient(const Eigen::VectorXd& theta, std::span<const ReinforceSample> batch);

struct CriticSample {
  Eigen::Matrix<double, kCriticFeatures, 1> features;
  double target = 0.0;
};

/// Mean squared error of the critic on `batch`.
double critic_loss(const CriticParams& critic, std::span<const CriticSample> batch);

/// One gradient step on the mean squared error:
/// phi <- phi - eta * (2 / |batch|) * sum (phi . x - L) x.
CriticParams critic_update(const CriticParams& critic, std::span<const CriticSample> batch, double eta);

struct TrainConfig {
  int iterations = 2000;  // N
  int batch = 16;         // B
  int K = 20;
  double eta_actor = 1e-2;
  double eta_critic = 1e-2;
  MultiplierConfig multipliers{};
  bool preference_features = true;
  RngSeed seed{0};

  void validate() const;
};

/// Draws one training instance.
using InstanceSampler = std::function<BtspInstance(Rng&)>;

struct TrainResult {
  PolicyParams policy;
  CriticParams critic;
  MultiplierState multipliers;
  /// Per iteration, the mean reward of each preference (K columns).
  Eigen::MatrixXd mean_reward;
};

/// Throws NumericalFailure as soon as a parameter turns non-finite.
TrainResult train(const InstanceSampler& sampler, const TrainConfig& cfg);

/// Per preference: the greedy tour plus (samples_per_pref - 1) sampled ones.
ParetoArchive infer_front(const PolicyParams& policy, const BtspInstance& inst, const PreferenceSet& prefs,
                          int samples_per_pref, RngSeed seed);

/// Mean Lagrangian reward of each preference over `instances`, with
/// `samples` sampled tours per (instance, preference) and fixed multipliers.
Eigen::VectorXd mean_policy_reward(const PolicyParams& policy, std::span<const BtspInstance> instances,
                                   const PreferenceSet& prefs, const Eigen::VectorXd& lambdas, int samples,
                                   RngSeed seed);

}  // namespace paretour

#endif  // PARETOUR_POLICY_HPP
