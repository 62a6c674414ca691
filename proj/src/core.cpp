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

#include "paretour/core.hpp"

#include <algorithm>
#include <cmath>

namespace paretour {

bool is_permutation_of(std::span<const int> order, int n) {
  if (n < 0 || order.size() != static_cast<std::size_t>(n)) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int c : order) {
    if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)]) return false;
    seen[static_cast<std::size_t>(c)] = 1;
  }
  return true;
}

Tour::Tour(std::vector<int> order) : order_(std::move(order)) {
  if (!is_permutation_of(order_, static_cast<int>(order_.size())) || order_.empty())
    throw InvalidInput("tour is not a permutation of 0..n-1");
  auto zero = std::find(order_.begin(), order_.end(), 0);
  std::rotate(order_.begin(), zero, order_.end());
}

Tour Tour::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  return Tour(std::move(order));
}

Tour Tour::reversed() const {
  std::vector<int> order(order_.rbegin(), order_.rend());
  return Tour(std::move(order));
}

EuclideanInstance::EuclideanInstance(CityCoords c) : coords(std::move(c)) {
  if (coords.rows() < 2) throw InvalidInput("euclidean instance needs n >= 2");
  if (!coords.allFinite()) throw InvalidInput("euclidean coordinates must be finite");
}

Eigen::MatrixXd EuclideanInstance::distances(int m) const {
  const int n = size();
  const int col = 2 * m;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      d(i, j) = d(j, i) = std::hypot(coords(i, col) - coords(j, col),
                                     coords(i, col + 1) - coords(j, col + 1));
    }
  }
  return d;
}

void validate_adjacency(const Eigen::MatrixXd& a, const std::string& name) {
  if (a.rows() != a.cols()) throw InvalidInput(name + " must be square");
  if (a.rows() < 2) throw InvalidInput(name + " needs n >= 2");
  if (!a.allFinite()) throw InvalidInput(name + " has non-finite entries");
  if ((a.array() < 0.0).any()) throw InvalidInput(name + " has negative entries");
  if (a.diagonal().cwiseAbs().maxCoeff() != 0.0) throw InvalidInput(name + " has nonzero diagonal");
  if (a != a.transpose()) throw InvalidInput(name + " is not symmetric");
}

AdjacencyInstance::AdjacencyInstance(Eigen::MatrixXd first, Eigen::MatrixXd second)
    : a1(std::move(first)), a2(std::move(second)) {
  validate_adjacency(a1, "A1");
  validate_adjacency(a2, "A2");
  if (a1.rows() != a2.rows()) throw InvalidInput("A1 and A2 differ in size");
}

namespace {

void check_tour_size(const Tour& tour, int n) {
  if (tour.size() != n) {
    throw InvalidInput("tour has " + std::to_string(tour.size()) + " cities, instance has " +
                       std::to_string(n));
  }
}

}  // namespace

ObjectiveVector evaluate_euclidean(const Tour& tour, const EuclideanInstance& inst) {
  const int n = inst.size();
  check_tour_size(tour, n);
  double f[2] = {0.0, 0.0};
  for (int m = 0; m < 2; ++m) {
    const int col = 2 * m;
    for (int i = 0; i < n; ++i) {
      const int a = tour[i];
      const int b = tour[(i + 1) % n];
      f[m] += std::hypot(inst.coords(a, col) - inst.coords(b, col),
                         inst.coords(a, col + 1) - inst.coords(b, col + 1));
    }
  }
  return {f[0], f[1]};
}

ObjectiveVector evaluate_adjacency(const Tour& tour, const AdjacencyInstance& inst) {
  const int n = inst.size();
  check_tour_size(tour, n);
  ObjectiveVector f;
  for (int i = 0; i < n; ++i) {
    const int a = tour[i];
    const int b = tour[(i + 1) % n];
    f.f1 += inst.a1(a, b);
    f.f2 += inst.a2(a, b);
  }
  return f;
}

BtspInstance::BtspInstance(EuclideanInstance inst)
    : source_(std::move(inst)),
      d1_(std::get<EuclideanInstance>(source_).distances(0)),
      d2_(std::get<EuclideanInstance>(source_).distances(1)) {}

BtspInstance::BtspInstance(AdjacencyInstance inst)
    : source_(std::move(inst)),
      d1_(std::get<AdjacencyInstance>(source_).a1),
      d2_(std::get<AdjacencyInstance>(source_).a2) {}

ObjectiveVector BtspInstance::evaluate_order(std::span<const int> order) const {
  const auto n = order.size();
  ObjectiveVector f;
  for (std::size_t i = 0; i < n; ++i) {
    const int a = order[i];
    const int b = order[(i + 1) % n];
    f.f1 += d1_(a, b);
    f.f2 += d2_(a, b);
  }
  return f;
}

ObjectiveVector BtspInstance::evaluate(const Tour& tour) const {
  return is_euclidean() ? evaluate_euclidean(tour, euclidean())
                        : evaluate_adjacency(tour, adjacency());
}

std::vector<ObjectiveVector> nondominated_filter(std::span<const ObjectiveVector> points) {
  std::vector<ObjectiveVector> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.f1 < b.f1 || (a.f1 == b.f1 && a.f2 < b.f2);
  });
  std::vector<ObjectiveVector> front;
  for (const auto& p : sorted) {
    // Sorted by (f1, f2): p is dominated or duplicated iff some earlier
    // point has f2 <= p.f2, i.e. iff the last kept point does.
    if (front.empty() || p.f2 < front.back().f2) front.push_back(p);
  }
  return front;
}

bool ParetoArchive::accepts(const ObjectiveVector& f) const {
  // Last entry with f1 <= f.f1 has the smallest f2 among those entries.
  auto it = std::upper_bound(entries_.begin(), entries_.end(), f.f1,
                             [](double v, const ArchiveEntry& e) { return v < e.objectives.f1; });
  if (it == entries_.begin()) return true;
  return std::prev(it)->objectives.f2 > f.f2;
}

bool ParetoArchive::insert(Tour tour, const ObjectiveVector& f) {
  if (!accepts(f)) return false;
  auto first = std::lower_bound(entries_.begin(), entries_.end(), f.f1,
                                [](const ArchiveEntry& e, double v) { return e.objectives.f1 < v; });
  auto last = first;
  while (last != entries_.end() && last->objectives.f2 >= f.f2) ++last;
  first = entries_.erase(first, last);
  entries_.insert(first, ArchiveEntry{std::move(tour), f});
  return true;
}

void ParetoArchive::merge(const ParetoArchive& other) {
  for (const auto& e : other.entries_) insert(e.tour, e.objectives);
}

std::vector<ObjectiveVector> ParetoArchive::objectives() const {
  std::vector<ObjectiveVector> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.objectives);
  return out;
}

ParetoArchive archive_insert(ParetoArchive archive, ArchiveEntry entry) {
  archive.insert(std::move(entry));
  return archive;
}

}  // namespace paretour
