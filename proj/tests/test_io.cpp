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

#include "paretour/instances.hpp"
#include "paretour/io.hpp"

#include <doctest.h>

#include <json.hpp>

#include <filesystem>

using namespace paretour;
using nlohmann::json;

TEST_CASE("instance round trip") {
  const BtspInstance e(gen_euclidean(12, RngSeed{3}));
  const json j = instance_to_json(e, 3);
  CHECK(j["kind"] == "euclidean");
  CHECK(j["n"] == 12);
  CHECK(j["seed"] == 3);
  CHECK(j["meta"]["schema_version"] == kSchemaVersion);
  const auto back = instance_from_json(json::parse(j.dump()));
  CHECK(back.seed == 3);
  CHECK(back.instance.euclidean().coords == e.euclidean().coords);

  const auto cov = gen_coverage(10, 10, 0.1, 6, RngSeed{2});
  const BtspInstance a(cov.instance);
  const auto ab = instance_from_json(json::parse(instance_to_json(a, 2).dump()));
  CHECK(ab.instance.dist(0) == a.dist(0));
  CHECK(ab.instance.dist(1) == a.dist(1));
}

TEST_CASE("instance loading rejects bad files") {
  json j = instance_to_json(BtspInstance(gen_euclidean(4, RngSeed{1})), 1);
  json newer = j;
  newer["meta"]["schema_version"] = kSchemaVersion + 1;
  CHECK_THROWS_AS(instance_from_json(newer), InvalidInput);

  json out_of_range = j;
  out_of_range["coords"][0][0] = 1.5;
  CHECK_THROWS_AS(instance_from_json(out_of_range), InvalidInput);

  json wrong_n = j;
  wrong_n["n"] = 5;
  CHECK_THROWS_AS(instance_from_json(wrong_n), InvalidInput);

  json asym = {{"kind", "adjacency"}, {"n", 2}, {"a1", {{0, 1}, {2, 0}}}, {"a2", {{0, 1}, {1, 0}}}, {"seed", 0}};
  CHECK_THROWS_AS(instance_from_json(asym), InvalidInput);
  CHECK_THROWS_AS(instance_from_json(json{{"kind", "banana"}}), InvalidInput);
  CHECK_THROWS_AS(instance_from_json(json::array()), InvalidInput);
}

TEST_CASE("grid map round trip") {
  const auto map = gen_gridmap(9, 7, 0.3, RngSeed{4});
  const json j = gridmap_to_json(map);
  CHECK(j["width"] == 9);
  CHECK(j["height"] == 7);
  const auto back = gridmap_from_json(j);
  CHECK(back.occupancy().cwiseEqual(map.occupancy()).all());
  json bad = j;
  bad["obstacles"].push_back({100, 0});
  CHECK_THROWS_AS(gridmap_from_json(bad), InvalidInput);
}

TEST_CASE("archive round trip") {
  ParetoArchive a;
  a.insert(Tour({0, 2, 1, 3}), {1.0, 3.0});
  a.insert(Tour({0, 1, 2, 3}), {2.0, 2.0});
  const json j = archive_to_json(a);
  REQUIRE(j.is_array());
  CHECK(j[0]["tour"] == json{0, 2, 1, 3});
  CHECK(j[0]["f1"] == 1.0);
  const auto back = archive_from_json(j);
  CHECK(back.objectives() == a.objectives());
  CHECK(back.entries()[1].tour == a.entries()[1].tour);
  CHECK_THROWS_AS(archive_from_json(json{{{"tour", {0, 0}}, {"f1", 1}, {"f2", 1}}}), InvalidInput);
}

TEST_CASE("checkpoint round trip") {
  Checkpoint ck;
  ck.policy.theta.setLinSpaced(-1.0, 1.0);
  ck.policy.preference_features = false;
  ck.critic.phi.setConstant(0.25);
  ck.lambdas = Eigen::VectorXd::LinSpaced(4, 0.0, 3.0);
  const json j = checkpoint_to_json(ck);
  CHECK(j["schema_version"] == 1);
  CHECK(j["feature_schema"] == "v1-nopref");
  const auto back = checkpoint_from_json(json::parse(j.dump()));
  CHECK(back.policy.theta == ck.policy.theta);
  CHECK(back.critic.phi == ck.critic.phi);
  CHECK(back.lambdas == ck.lambdas);
  CHECK_FALSE(back.policy.preference_features);

  json newer = j;
  newer["schema_version"] = 2;
  CHECK_THROWS_AS(checkpoint_from_json(newer), InvalidInput);
  json short_theta = j;
  short_theta["theta"] = json::array({1.0});
  CHECK_THROWS_AS(checkpoint_from_json(short_theta), InvalidInput);
}

TEST_CASE("json files") {
  const auto path = std::filesystem::temp_directory_path() / "paretour_io_test.json";
  write_json_file(path, json{{"a", 1}});
  CHECK(read_json_file(path)["a"] == 1);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_json_file(path), InvalidInput);
}
