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

#include "paretour/neighborhood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace paretour {

std::vector<int> nearest_neighbor_order(const BtspInstance& inst, double c1, double c2) {
  const int n = inst.size();
  std::vector<int> order{0};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[0] = 1;
  for (int step = 1; step < n; ++step) {
    const int cur = order.back();
    int next = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double c = c1 * inst.d1(cur, j) + c2 * inst.d2(cur, j);
      if (c < best) {
        best = c;
        next = j;
      }
    }
    used[static_cast<std::size_t>(next)] = 1;
    order.push_back(next);
  }
  return order;
}

std::vector<int> random_order(int n, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 1; --i) std::swap(order[static_cast<std::size_t>(i)],
                                            order[static_cast<std::size_t>(1 + uniform_index(rng, i))]);
  return order;
}

void apply_two_opt(std::vector<int>& order, int i, int j) {
  std::reverse(order.begin() + i, order.begin() + j + 1);
}

std::vector<int> apply_or_opt(const std::vector<int>& order, int i, int len, int k) {
  const int u = order[static_cast<std::size_t>(k)];
  std::vector<int> rest;
  rest.reserve(order.size());
  rest.insert(rest.end(), order.begin(), order.begin() + i);
  rest.insert(rest.end(), order.begin() + i + len, order.end());
  const auto at = std::find(rest.begin(), rest.end(), u) + 1;
  rest.insert(at, order.begin() + i, order.begin() + i + len);
  return rest;
}

namespace {

bool improves(double candidate, double current) {
  return candidate < current - 1e-12 * std::max(1.0, std::abs(current));
}

}  // namespace

TourImprover::TourImprover(const BtspInstance& inst, ScalarCost cost, ParetoArchive* archive)
    : inst_(inst), cost_(std::move(cost)), archive_(archive) {}

SearchState TourImprover::start(std::vector<int> order) {
  SearchState s;
  s.objectives = inst_.evaluate_order(order);
  s.cost = cost_(s.objectives);
  ++evaluations_;
  if (archive_ && archive_->accepts(s.objectives)) archive_->insert(Tour(order), s.objectives);
  s.order = std::move(order);
  return s;
}

void TourImprover::offer(const std::vector<int>& order, const ObjectiveVector& approx) {
  if (!archive_ || !archive_->accepts(approx)) return;
  const ObjectiveVector exact = inst_.evaluate_order(order);
  archive_->insert(Tour(order), exact);
}

bool TourImprover::accept(SearchState& state, std::vector<int> next, double approx_cost) {
  if (!improves(approx_cost, state.cost)) return false;
  const ObjectiveVector exact = inst_.evaluate_order(next);
  const double exact_cost = cost_(exact);
  if (!improves(exact_cost, state.cost)) return false;
  state.order = std::move(next);
  state.objectives = exact;
  state.cost = exact_cost;
  return true;
}

bool TourImprover::try_two_opt(SearchState& state, int i, int j) {
  const int n = static_cast<int>(state.order.size());
  if (i == 1 && j == n - 1) return false;  // reverses the whole cycle
  const auto& t = state.order;
  const int a = t[static_cast<std::size_t>(i - 1)];
  const int b = t[static_cast<std::size_t>(i)];
  const int c = t[static_cast<std::size_t>(j)];
  const int d = t[static_cast<std::size_t>((j + 1) % n)];
  ObjectiveVector f = state.objectives;
  f.f1 += inst_.d1(a, c) + inst_.d1(b, d) - inst_.d1(a, b) - inst_.d1(c, d);
  f.f2 += inst_.d2(a, c) + inst_.d2(b, d) - inst_.d2(a, b) - inst_.d2(c, d);
  ++evaluations_;
  const double cand = cost_(f);
  const bool archive_wants = archive_ && archive_->accepts(f);
  if (!archive_wants && !improves(cand, state.cost)) return false;
  std::vector<int> next = t;
  apply_two_opt(next, i, j);
  if (archive_wants) offer(next, f);
  return accept(state, std::move(next), cand);
}

bool TourImprover::try_or_opt(SearchState& state, int i, int len, int k) {
  const int n = static_cast<int>(state.order.size());
  const auto& t = state.order;
  auto at = [&](int p) { return t[static_cast<std::size_t>(p % n)]; };
  const int prev = at(i - 1);
  const int s0 = at(i);
  const int se = at(i + len - 1);
  const int next_city = at(i + len);
  const int u = at(k);
  const int v = at(k + 1);
  auto delta = [&](const Eigen::MatrixXd& d) {
    return d(prev, next_city) - d(prev, s0) - d(se, next_city) + d(u, s0) + d(se, v) - d(u, v);
  };
  ObjectiveVector f = state.objectives;
  f.f1 += delta(inst_.dist(0));
  f.f2 += delta(inst_.dist(1));
  ++evaluations_;
  const double cand = cost_(f);
  const bool archive_wants = archive_ && archive_->accepts(f);
  if (!archive_wants && !improves(cand, state.cost)) return false;
  std::vector<int> next = apply_or_opt(t, i, len, k);
  if (archive_wants) offer(next, f);
  return accept(state, std::move(next), cand);
}

int TourImprover::random_moves(SearchState& state, long proposals, Rng& rng) {
  const int n = static_cast<int>(state.order.size());
  if (n < 3) return 0;
  int accepted = 0;
  const int max_len = std::min(3, n - 2);
  for (long p = 0; p < proposals; ++p) {
    if (n > 3 && (rng() & 1U)) {
      int i = 1 + uniform_index(rng, n - 1);
      int j = 1 + uniform_index(rng, n - 2);
      if (j >= i) ++j;
      if (i > j) std::swap(i, j);
      accepted += try_two_opt(state, i, j);
    } else {
      const int len = 1 + uniform_index(rng, max_len);
      const int i = 1 + uniform_index(rng, n - len);
      const int r = uniform_index(rng, n - len - 1);
      const int k = r < i - 1 ? r : r + len + 1;
      accepted += try_or_opt(state, i, len, k);
    }
  }
  return accepted;
}

int TourImprover::polish(SearchState& state, Rng& rng) {
  const int n = static_cast<int>(state.order.size());
  if (n < 3) return 0;
  const int max_len = std::min(3, n - 2);
  int accepted = 0;
  for (bool improved = true; improved;) {
    improved = false;
    const int offset = uniform_index(rng, n - 1);
    for (int a = 0; a < n - 1 && !improved; ++a) {
      const int i = 1 + (a + offset) % (n - 1);
      for (int j = i + 1; j < n && !improved; ++j) improved = try_two_opt(state, i, j);
      for (int len = 1; len <= max_len && i + len - 1 <= n - 1 && !improved; ++len) {
        for (int k = 0; k < n && !improved; ++k) {
          if (k >= i - 1 && k <= i + len - 1) continue;
          improved = try_or_opt(state, i, len, k);
        }
      }
    }
    accepted += improved;
  }
  return accepted;
}

}  // namespace paretour
