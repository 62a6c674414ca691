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

// JSON file formats: instances, grid maps, Pareto archives and policy
// checkpoints. Instance and checkpoint files carry schema_version; readers
// refuse versions newer than kSchemaVersion.

#ifndef PARETOUR_IO_HPP
#define PARETOUR_IO_HPP

#include "paretour/core.hpp"
#include "paretour/instances.hpp"
#include "paretour/policy.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>

namespace paretour {

inline constexpr int kSchemaVersion = 1;

struct InstanceFile {
  BtspInstance instance;
  std::uint64_t seed = 0;
  nlohmann::json meta = nlohmann::json::object();
};

/// {"kind", "n", "coords" | "a1"+"a2", "seed", "meta"}; meta gains
/// schema_version.
nlohmann::json instance_to_json(const BtspInstance& inst, std::uint64_t seed,
                                nlohmann::json meta = nlohmann::json::object());
InstanceFile instance_from_json(const nlohmann::json& j);

/// {"width", "height", "obstacles": [[r, c], ...]}
nlohmann::json gridmap_to_json(const GridMap& map);
GridMap gridmap_from_json(const nlohmann::json& j);

/// [{"tour": [...], "f1": .., "f2": ..}, ...]
nlohmann::json archive_to_json(const ParetoArchive& archive);
/// Entries are re-inserted, so the result is always a valid archive.
ParetoArchive archive_from_json(const nlohmann::json& j);

struct Checkpoint {
  PolicyParams policy;
  CriticParams critic;
  Eigen::VectorXd lambdas;
};

/// {"theta", "phi", "lambdas", "schema_version", "feature_schema"}
nlohmann::json checkpoint_to_json(const Checkpoint& ck);
Checkpoint checkpoint_from_json(const nlohmann::json& j);

/// Throws InvalidInput on unreadable or malformed files.
nlohmann::json read_json_file(const std::filesystem::path& path);
/// Writes `j.dump(indent)` plus a trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j, int indent = -1);

}  // namespace paretour

#endif  // PARETOUR_IO_HPP
