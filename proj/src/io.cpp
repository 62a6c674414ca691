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

#include "paretour/io.hpp"

#include <fstream>
#include <sstream>

namespace paretour {

using nlohmann::json;

namespace {

void check_schema(const json& holder, const char* what) {
  if (!holder.is_object() || !holder.contains("schema_version")) return;
  if (!holder["schema_version"].is_number_integer())
    throw InvalidInput(std::string(what) + ": schema_version must be an integer");
  const int version = holder["schema_version"].get<int>();
  if (version > kSchemaVersion)
    throw InvalidInput(std::string(what) + ": schema_version " + std::to_string(version) +
                       " is newer than supported version " + std::to_string(kSchemaVersion));
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows, Eigen::Index n, Eigen::Index cols, const char* what) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
    throw InvalidInput(std::string(what) + " must have " + std::to_string(n) + " rows");
  Eigen::MatrixXd m(n, cols);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw InvalidInput(std::string(what) + " row " + std::to_string(i) + " has the wrong length");
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = row[static_cast<std::size_t>(j)].get<double>();
  }
  return m;
}

json vector_to_json(const Eigen::VectorXd& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

Eigen::VectorXd vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

}  // namespace

json instance_to_json(const BtspInstance& inst, std::uint64_t seed, json meta) {
  meta["schema_version"] = kSchemaVersion;
  json j;
  j["kind"] = inst.is_euclidean() ? "euclidean" : "adjacency";
  j["n"] = inst.size();
  if (inst.is_euclidean()) {
    j["coords"] = matrix_to_json(inst.euclidean().coords);
  } else {
    j["a1"] = matrix_to_json(inst.adjacency().a1);
    j["a2"] = matrix_to_json(inst.adjacency().a2);
  }
  j["seed"] = seed;
  j["meta"] = std::move(meta);
  return j;
}

InstanceFile instance_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InvalidInput("instance file must hold a JSON object");
    check_schema(j, "instance");
    json meta = j.value("meta", json::object());
    check_schema(meta, "instance meta");
    const std::string kind = j.at("kind").get<std::string>();
    const auto n = j.at("n").get<Eigen::Index>();
    if (n < 2) throw InvalidInput("instance needs n >= 2");
    const std::uint64_t seed = j.value("seed", std::uint64_t{0});
    if (kind == "euclidean") {
      CityCoords coords = matrix_from_json(j.at("coords"), n, 4, "coords");
      if ((coords.array() < 0.0).any() || (coords.array() >= 1.0).any())
        throw InvalidInput("euclidean coordinates must lie in [0, 1)");
      return {BtspInstance(EuclideanInstance(std::move(coords))), seed, std::move(meta)};
    }
    if (kind == "adjacency") {
      return {BtspInstance(AdjacencyInstance(matrix_from_json(j.at("a1"), n, n, "a1"),
                                             matrix_from_json(j.at("a2"), n, n, "a2"))),
              seed, std::move(meta)};
    }
    throw InvalidInput("unknown instance kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed instance: ") + e.what());
  }
}

json gridmap_to_json(const GridMap& map) {
  json obstacles = json::array();
  for (int r = 0; r < map.height(); ++r)
    for (int c = 0; c < map.width(); ++c)
      if (!map.is_free({r, c})) obstacles.push_back({r, c});
  return {{"width", map.width()}, {"height", map.height()}, {"obstacles", std::move(obstacles)}};
}

GridMap gridmap_from_json(const json& j) {
  try {
    GridMap map(j.at("width").get<int>(), j.at("height").get<int>());
    for (const auto& cell : j.at("obstacles")) {
      const Cell c{cell.at(0).get<int>(), cell.at(1).get<int>()};
      if (!map.in_bounds(c)) throw InvalidInput("obstacle outside the map");
      map.set_obstacle(c, true);
    }
    if (map.free_count() == 0) throw InvalidInput("grid map has no free cell");
    return map;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed grid map: ") + e.what());
  }
}

json archive_to_json(const ParetoArchive& archive) {
  json out = json::array();
  for (const auto& e : archive.entries()) {
    out.push_back({{"tour", std::vector<int>(e.tour.order().begin(), e.tour.order().end())},
                   {"f1", e.objectives.f1},
                   {"f2", e.objectives.f2}});
  }
  return out;
}

ParetoArchive archive_from_json(const json& j) {
  try {
    if (!j.is_array()) throw InvalidInput("archive file must hold a JSON array");
    ParetoArchive archive;
    for (const auto& e : j)
      archive.insert(Tour(e.at("tour").get<std::vector<int>>()), {e.at("f1").get<double>(), e.at("f2").get<double>()});
    return archive;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed archive: ") + e.what());
  }
}

json checkpoint_to_json(const Checkpoint& ck) {
  return {{"theta", vector_to_json(ck.policy.theta)},
          {"phi", vector_to_json(ck.critic.phi)},
          {"lambdas", vector_to_json(ck.lambdas)},
          {"schema_version", kSchemaVersion},
          {"feature_schema", ck.policy.feature_schema()}};
}

Checkpoint checkpoint_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InvalidInput("checkpoint must hold a JSON object");
    if (!j.contains("schema_version")) throw InvalidInput("checkpoint lacks schema_version");
    check_schema(j, "checkpoint");
    Checkpoint ck;
    const std::string schema = j.at("feature_schema").get<std::string>();
    if (schema != "v1" && schema != "v1-nopref") throw InvalidInput("unknown feature_schema '" + schema + "'");
    ck.policy.preference_features = schema == "v1";
    ck.policy.theta = vector_from_json(j.at("theta"), "theta");
    ck.critic.phi = vector_from_json(j.at("phi"), "phi");
    ck.lambdas = vector_from_json(j.at("lambdas"), "lambdas");
    if (ck.policy.theta.size() != kPolicyFeatures || ck.critic.phi.size() != kCriticFeatures)
      throw InvalidInput("checkpoint parameter sizes do not match the feature schema");
    return ck;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed checkpoint: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j, int indent) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(indent) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace paretour
