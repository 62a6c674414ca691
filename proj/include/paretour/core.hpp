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

// Core types shared by every solver: objective vectors, tours, the two
// instance kinds, Pareto dominance and the nondominated archive.

#ifndef PARETOUR_CORE_HPP
#define PARETOUR_CORE_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace paretour {

/// Malformed arguments or data (bad sizes, non-permutations, asymmetric
/// matrices, out-of-range parameters).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The instance cannot be solved as posed (unreachable points on a map,
/// not enough free cells, no connected map within the attempt budget).
class InfeasibleInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical procedure diverged or failed to converge.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ObjectiveVector {
  double f1 = 0.0;
  double f2 = 0.0;

  Eigen::Vector2d vec() const { return {f1, f2}; }
  double operator[](int m) const { return m == 0 ? f1 : f2; }

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

/// True iff `order` holds each of 0..n-1 exactly once.
bool is_permutation_of(std::span<const int> order, int n);

/// A closed tour stored in canonical rotation (city 0 first).
class Tour {
 public:
  Tour() = default;

  /// Validates that `order` is a permutation of 0..n-1 and rotates it so
  /// that city 0 comes first. Throws InvalidInput otherwise.
  explicit Tour(std::vector<int> order);

  /// The identity tour 0, 1, ..., n-1.
  static Tour identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  std::span<const int> order() const { return order_; }
  int operator[](int i) const { return order_[static_cast<std::size_t>(i)]; }

  /// Same cycle traversed in the opposite direction (still starts at 0).
  Tour reversed() const;

  friend bool operator==(const Tour&, const Tour&) = default;

 private:
  std::vector<int> order_;
};

using CityCoords = Eigen::Matrix<double, Eigen::Dynamic, 4, Eigen::RowMajor>;

/// Cities with one 2-D position per objective: columns (x1, y1, x2, y2).
/// Generated and loaded instances keep every coordinate in [0, 1).
struct EuclideanInstance {
  CityCoords coords;

  explicit EuclideanInstance(CityCoords c);
  int size() const { return static_cast<int>(coords.rows()); }
  /// Pairwise distance matrix of objective m (0 or 1).
  Eigen::MatrixXd distances(int m) const;
};

/// Two symmetric nonnegative edge-cost matrices with zero diagonal.
struct AdjacencyInstance {
  Eigen::MatrixXd a1;
  Eigen::MatrixXd a2;

  AdjacencyInstance(Eigen::MatrixXd first, Eigen::MatrixXd second);
  int size() const { return static_cast<int>(a1.rows()); }
};

/// Checks n >= 2, square, finite, nonnegative, symmetric, zero diagonal.
void validate_adjacency(const Eigen::MatrixXd& a, const std::string& name);

ObjectiveVector evaluate_euclidean(const Tour& tour, const EuclideanInstance& inst);
ObjectiveVector evaluate_adjacency(const Tour& tour, const AdjacencyInstance& inst);

/// Either instance kind, with both edge-cost matrices materialized so the
/// solvers can work on one representation.
class BtspInstance {
 public:
  explicit BtspInstance(EuclideanInstance inst);
  explicit BtspInstance(AdjacencyInstance inst);

  int size() const { return static_cast<int>(d1_.rows()); }
  bool is_euclidean() const { return std::holds_alternative<EuclideanInstance>(source_); }
  const EuclideanInstance& euclidean() const { return std::get<EuclideanInstance>(source_); }
  const AdjacencyInstance& adjacency() const { return std::get<AdjacencyInstance>(source_); }

  /// Edge costs of objective m (0 or 1).
  const Eigen::MatrixXd& dist(int m) const { return m == 0 ? d1_ : d2_; }
  double d1(int i, int j) const { return d1_(i, j); }
  double d2(int i, int j) const { return d2_(i, j); }

  /// Closed-loop cost of any visiting order of length n (no permutation
  /// check; solvers call this on orders they maintain themselves).
  ObjectiveVector evaluate_order(std::span<const int> order) const;
  /// Checked evaluation; dispatches to the exact per-kind routine.
  ObjectiveVector evaluate(const Tour& tour) const;

 private:
  std::variant<EuclideanInstance, AdjacencyInstance> source_;
  Eigen::MatrixXd d1_;
  Eigen::MatrixXd d2_;
};

/// a <= b componentwise and a < b in at least one component.
constexpr bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

/// The nondominated subset of `points`, duplicates collapsed, sorted by f1.
std::vector<ObjectiveVector> nondominated_filter(std::span<const ObjectiveVector> points);

struct ArchiveEntry {
  Tour tour;
  ObjectiveVector objectives;
};

/// Mutually nondominated (tour, objective) pairs. Entries are kept sorted
/// by f1 ascending, hence f2 strictly descending; lookups are logarithmic.
class ParetoArchive {
 public:
  /// Whether inserting a point with these objectives would change the
  /// archive (not dominated by, and not equal to, any member).
  bool accepts(const ObjectiveVector& f) const;

  /// Adds the entry iff accepts(f) and drops every member it dominates.
  /// Returns whether the entry was added.
  bool insert(Tour tour, const ObjectiveVector& f);
  bool insert(ArchiveEntry entry) { return insert(std::move(entry.tour), entry.objectives); }

  void merge(const ParetoArchive& other);

  const std::vector<ArchiveEntry>& entries() const { return entries_; }
  std::vector<ObjectiveVector> objectives() const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<ArchiveEntry> entries_;
};

/// Functional form of ParetoArchive::insert.
ParetoArchive archive_insert(ParetoArchive archive, ArchiveEntry entry);

}  // namespace paretour

#endif  // PARETOUR_CORE_HPP
