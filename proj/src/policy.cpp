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

#include "paretour/policy.hpp"

#include "paretour/instances.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace paretour {

namespace {

Eigen::MatrixXd normalize_offdiagonal(const Eigen::MatrixXd& d) {
  const auto n = d.rows();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j) {
        lo = std::min(lo, d(i, j));
        hi = std::max(hi, d(i, j));
      }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  if (hi > lo) {
    out = (d.array() - lo) / (hi - lo);
    out.diagonal().setZero();
  }
  return out;
}

Eigen::Vector3d raw_summary(const Eigen::MatrixXd& d) {
  const auto n = d.rows();
  double sum = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j) {
        sum += d(i, j);
        lo = std::min(lo, d(i, j));
        hi = std::max(hi, d(i, j));
      }
  return {sum / static_cast<double>(n * (n - 1)), lo, hi};
}

double log_sum_exp(const Eigen::VectorXd& s) {
  const double m = s.maxCoeff();
  return m + std::log((s.array() - m).exp().sum());
}

void require_finite(const Eigen::VectorXd& v, const char* what, int iteration) {
  if (!v.allFinite())
    throw NumericalFailure(std::string(what) + " became non-finite at iteration " + std::to_string(iteration));
}

// Candidate feature rows for every unvisited city, in ascending index order.
void fill_candidates(const PolicyContext& ctx, const PreferenceVector& w, int from, const std::vector<char>& visited,
                     bool preference_features, std::vector<int>& cities,
                     Eigen::Matrix<double, Eigen::Dynamic, kPolicyFeatures>& rows) {
  cities.clear();
  for (int j = 0; j < ctx.n; ++j)
    if (!visited[static_cast<std::size_t>(j)]) cities.push_back(j);
  rows.resize(static_cast<Eigen::Index>(cities.size()), kPolicyFeatures);
  for (std::size_t r = 0; r < cities.size(); ++r)
    rows.row(static_cast<Eigen::Index>(r)) = policy_features(ctx, w, from, cities[r], preference_features).transpose();
}

}  // namespace

PolicyContext make_context(const BtspInstance& inst) {
  PolicyContext ctx;
  ctx.n = inst.size();
  ctx.nd1 = normalize_offdiagonal(inst.dist(0));
  ctx.nd2 = normalize_offdiagonal(inst.dist(1));
  ctx.node.resize(ctx.n, 6);
  const auto f1 = node_features(ctx.nd1).stats;
  const auto f2 = node_features(ctx.nd2).stats;
  const double deg = ctx.n - 1;
  ctx.node.col(0) = f1.col(0) / deg;
  ctx.node.col(1) = f1.col(1);
  ctx.node.col(2) = f1.col(2);
  ctx.node.col(3) = f2.col(0) / deg;
  ctx.node.col(4) = f2.col(1);
  ctx.node.col(5) = f2.col(2);
  ctx.edge_summary << raw_summary(inst.dist(0)), raw_summary(inst.dist(1));
  return ctx;
}

Eigen::Matrix<double, kPolicyFeatures, 1> policy_features(const PolicyContext& ctx, const PreferenceVector& w,
                                                          int from, int to, bool preference_features) {
  const double d1 = ctx.nd1(from, to);
  const double d2 = ctx.nd2(from, to);
  const double p = preference_features ? 1.0 : 0.0;
  Eigen::Matrix<double, kPolicyFeatures, 1> phi;
  phi << d1, d2, p * w.w1 * d1, p * w.w2 * d2, p * w.w2 * d1, p * w.w1 * d2, ctx.node.row(to).transpose(), 1.0;
  return phi;
}

Eigen::Matrix<double, kCriticFeatures, 1> critic_features(const PolicyContext& ctx, const PreferenceVector& w) {
  Eigen::Matrix<double, kCriticFeatures, 1> x;
  x << w.w1, w.w2, ctx.edge_summary, ctx.n / 100.0;
  return x;
}

double critic_predict(const CriticParams& critic, const PolicyContext& ctx, const PreferenceVector& w) {
  return critic.phi.dot(critic_features(ctx, w));
}

Trajectory sample_tour(const PolicyParams& policy, const PolicyContext& ctx, const PreferenceVector& w, Rng& rng) {
  std::vector<char> visited(static_cast<std::size_t>(ctx.n), 0);
  visited[0] = 1;
  std::vector<int> order{0};
  std::vector<int> cities;
  Trajectory traj;
  traj.steps.reserve(static_cast<std::size_t>(ctx.n - 1));
  for (int step = 1; step < ctx.n; ++step) {
    DecodeStep rec;
    fill_candidates(ctx, w, order.back(), visited, policy.preference_features, cities, rec.candidates);
    const Eigen::VectorXd scores = rec.candidates * policy.theta;
    const double lse = log_sum_exp(scores);
    const double u = uniform01(rng);
    double cumulative = 0.0;
    int pick = static_cast<int>(cities.size()) - 1;
    for (std::size_t r = 0; r < cities.size(); ++r) {
      cumulative += std::exp(scores[static_cast<Eigen::Index>(r)] - lse);
      if (u < cumulative) {
        pick = static_cast<int>(r);
        break;
      }
    }
    rec.chosen = pick;
    traj.log_prob += scores[pick] - lse;
    const int city = cities[static_cast<std::size_t>(pick)];
    visited[static_cast<std::size_t>(city)] = 1;
    order.push_back(city);
    traj.steps.push_back(std::move(rec));
  }
  traj.tour = Tour(std::move(order));
  return traj;
}

Tour greedy_tour(const PolicyParams& policy, const PolicyContext& ctx, const PreferenceVector& w) {
  std::vector<char> visited(static_cast<std::size_t>(ctx.n), 0);
  visited[0] = 1;
  std::vector<int> order{0};
  std::vector<int> cities;
  Eigen::Matrix<double, Eigen::Dynamic, kPolicyFeatures> rows;
  for (int step = 1; step < ctx.n; ++step) {
    fill_candidates(ctx, w, order.back(), visited, policy.preference_features, cities, rows);
    const Eigen::VectorXd scores = rows * policy.theta;
    Eigen::Index best = 0;
    scores.maxCoeff(&best);
    const int city = cities[static_cast<std::size_t>(best)];
    visited[static_cast<std::size_t>(city)] = 1;
    order.push_back(city);
  }
  return Tour(std::move(order));
}

double tour_log_probability(const PolicyParams& policy, const PolicyContext& ctx, const PreferenceVector& w,
                            const Tour& tour) {
  if (tour.size() != ctx.n) throw InvalidInput("tour size does not match the policy context");
  std::vector<char> visited(static_cast<std::size_t>(ctx.n), 0);
  visited[0] = 1;
  double log_prob = 0.0;
  for (int step = 1; step < ctx.n; ++step) {
    const int from = tour[step - 1];
    const int to = tour[step];
    double chosen = 0.0;
    Eigen::VectorXd scores(ctx.n - step);
    Eigen::Index r = 0;
    for (int j = 0; j < ctx.n; ++j) {
      if (visited[static_cast<std::size_t>(j)]) continue;
      scores[r++] = policy.theta.dot(policy_features(ctx, w, from, j, policy.preference_features));
      if (j == to) chosen = scores[r - 1];
    }
    log_prob += chosen - log_sum_exp(scores);
    visited[static_cast<std::size_t>(to)] = 1;
  }
  return log_prob;
}

double trajectory_log_probability(const Eigen::VectorXd& theta, const Trajectory& traj) {
  double log_prob = 0.0;
  for (const auto& step : traj.steps) {
    const Eigen::VectorXd scores = step.candidates * theta;
    log_prob += scores[step.chosen] - log_sum_exp(scores);
  }
  return log_prob;
}

Eigen::VectorXd log_prob_gradient(const Eigen::VectorXd& theta, const Trajectory& traj) {
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(theta.size());
  for (const auto& step : traj.steps) {
    const Eigen::VectorXd scores = step.candidates * theta;
    const Eigen::VectorXd probs = (scores.array() - log_sum_exp(scores)).exp();
    grad += step.candidates.row(step.chosen).transpose() - step.candidates.transpose() * probs;
  }
  return grad;
}

Eigen::VectorXd reinforce_gradient(const Eigen::VectorXd& theta, std::span<const ReinforceSample> batch) {
  if (batch.empty()) throw InvalidInput("reinforce_gradient needs a non-empty batch");
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(theta.size());
  for (const auto& s : batch) {
    const double advantage = s.reward - s.baseline;
    if (advantage != 0.0) grad += advantage * log_prob_gradient(theta, *s.trajectory);
  }
  return grad / static_cast<double>(batch.size());
}

double critic_loss(const CriticParams& critic, std::span<const CriticSample> batch) {
  if (batch.empty()) throw InvalidInput("critic batch must be non-empty");
  double sum = 0.0;
  for (const auto& s : batch) {
    const double e = critic.phi.dot(s.features) - s.target;
    sum += e * e;
  }
  return sum / static_cast<double>(batch.size());
}

CriticParams critic_update(const CriticParams& critic, std::span<const CriticSample> batch, double eta) {
  if (batch.empty()) throw InvalidInput("critic batch must be non-empty");
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(critic.phi.size());
  for (const auto& s : batch) grad += 2.0 * (critic.phi.dot(s.features) - s.target) * s.features;
  CriticParams next = critic;
  next.phi -= eta * grad / static_cast<double>(batch.size());
  return next;
}

void TrainConfig::validate() const {
  if (iterations < 0) throw InvalidInput("iterations must be >= 0");
  if (batch < 1 || K < 1) throw InvalidInput("batch and K must be >= 1");
  if (!(eta_actor > 0.0 && eta_critic > 0.0)) throw InvalidInput("learning rates must be > 0");
  MultiplierState::uniform(1, multipliers);
}

TrainResult train(const InstanceSampler& sampler, const TrainConfig& cfg) {
  cfg.validate();
  Rng rng = make_rng(cfg.seed);
  const PreferenceSet prefs = generate_preferences(cfg.K);
  TrainResult out;
  out.policy.preference_features = cfg.preference_features;
  out.multipliers = MultiplierState::uniform(cfg.K, cfg.multipliers);
  out.mean_reward = Eigen::MatrixXd::Zero(cfg.iterations, cfg.K);

  const auto batch_size = static_cast<std::size_t>(cfg.K * cfg.batch);
  for (int it = 0; it < cfg.iterations; ++it) {
    std::vector<BtspInstance> graphs;
    std::vector<PolicyContext> contexts;
    for (int j = 0; j < cfg.batch; ++j) {
      graphs.push_back(sampler(rng));
      contexts.push_back(make_context(graphs.back()));
    }

    std::vector<Trajectory> trajectories;
    trajectories.reserve(batch_size);
    std::vector<ReinforceSample> actor_batch;
    std::vector<CriticSample> critic_batch;
    std::vector<std::vector<double>> g(static_cast<std::size_t>(cfg.K));
    for (int k = 0; k < cfg.K; ++k) {
      const PreferenceVector& w = prefs[k];
      for (int j = 0; j < cfg.batch; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        trajectories.push_back(sample_tour(out.policy, contexts[uj], w, rng));
        const ObjectiveVector f = graphs[uj].evaluate(trajectories.back().tour);
        const double gk = safe_cone_constraint(f, w);
        const double reward = surrogate_objective(f) + out.multipliers.lambdas[k] * gk;
        const auto x = critic_features(contexts[uj], w);
        actor_batch.push_back({nullptr, reward, out.critic.phi.dot(x)});
        critic_batch.push_back({x, reward});
        g[static_cast<std::size_t>(k)].push_back(gk);
        out.mean_reward(it, k) += reward / cfg.batch;
      }
    }
    for (std::size_t s = 0; s < actor_batch.size(); ++s) actor_batch[s].trajectory = &trajectories[s];

    out.policy.theta -= cfg.eta_actor * reinforce_gradient(out.policy.theta, actor_batch);
    out.critic = critic_update(out.critic, critic_batch, cfg.eta_critic);
    out.multipliers = update_multipliers(out.multipliers, g);

    require_finite(out.policy.theta, "actor parameters", it);
    require_finite(out.critic.phi, "critic parameters", it);
    require_finite(out.multipliers.lambdas, "multipliers", it);
  }
  return out;
}

ParetoArchive infer_front(const PolicyParams& policy, const BtspInstance& inst, const PreferenceSet& prefs,
                          int samples_per_pref, RngSeed seed) {
  if (samples_per_pref < 1) throw InvalidInput("samples_per_pref must be >= 1");
  const PolicyContext ctx = make_context(inst);
  ParetoArchive archive;
  for (int k = 0; k < prefs.size(); ++k) {
    Tour greedy = greedy_tour(policy, ctx, prefs[k]);
    const ObjectiveVector f = inst.evaluate(greedy);
    archive.insert(std::move(greedy), f);
    Rng rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
    for (int s = 1; s < samples_per_pref; ++s) {
      Trajectory traj = sample_tour(policy, ctx, prefs[k], rng);
      const ObjectiveVector fs = inst.evaluate(traj.tour);
      archive.insert(std::move(traj.tour), fs);
    }
  }
  return archive;
}

Eigen::VectorXd mean_policy_reward(const PolicyParams& policy, std::span<const BtspInstance> instances,
                                   const PreferenceSet& prefs, const Eigen::VectorXd& lambdas, int samples,
                                   RngSeed seed) {
  if (lambdas.size() != prefs.size()) throw InvalidInput("one multiplier per preference required");
  if (instances.empty() || samples < 1) throw InvalidInput("need instances and samples >= 1");
  Rng rng = make_rng(seed);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(prefs.size());
  for (const auto& inst : instances) {
    const PolicyContext ctx = make_context(inst);
    for (int k = 0; k < prefs.size(); ++k) {
      for (int s = 0; s < samples; ++s) {
        const Trajectory traj = sample_tour(policy, ctx, prefs[k], rng);
        const ObjectiveVector f = inst.evaluate(traj.tour);
        mean[k] += surrogate_objective(f) + lambdas[k] * safe_cone_constraint(f, prefs[k]);
      }
    }
  }
  return mean / static_cast<double>(instances.size() * static_cast<std::size_t>(samples));
}

}  // namespace paretour
