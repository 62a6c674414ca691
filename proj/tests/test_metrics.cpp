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

#include "oracles.hpp"

#include "paretour/metrics.hpp"

#include <doctest.h>

#include <sstream>

using namespace paretour;

TEST_CASE("reference point rule") {
  CHECK(reference_point(200).r1 == 200.0);
  CHECK(reference_point(200).r2 == 200.0);
  CHECK(reference_point(1).r1 == 1.0);
  CHECK(reference_point(40).r2 == 40.0);
  CHECK_THROWS_AS(reference_point(0), InvalidInput);
}

TEST_CASE("exact hypervolume") {
  const std::vector<ObjectiveVector> one{{1, 1}};
  CHECK(hv_exact_2d(one, {2, 2}) == 25.0);
  const std::vector<ObjectiveVector> stairs{{1, 3}, {2, 2}, {3, 1}};
  CHECK(hv_exact_2d(stairs, {4, 4}) == doctest::Approx(37.5).epsilon(1e-15));
  auto with_dominated = stairs;
  with_dominated.push_back({3, 3});
  CHECK(hv_exact_2d(with_dominated, {4, 4}) == hv_exact_2d(stairs, {4, 4}));
  CHECK(hv_exact_2d(std::vector<ObjectiveVector>{}, {4, 4}) == 0.0);
  const std::vector<ObjectiveVector> outside{{5, 1}, {1, 5}};
  CHECK(hv_exact_2d(outside, {4, 4}) == 0.0);
  CHECK(count_outside(outside, {4, 4}) == 2);
}

TEST_CASE("exact hypervolume agrees with strip oracle") {
  Rng rng = make_rng(RngSeed{10});
  for (int t = 0; t < 200; ++t) {
    std::vector<ObjectiveVector> pts;
    const int m = uniform_index(rng, 40);
    for (int i = 0; i < m; ++i) pts.push_back({12 * uniform01(rng), 12 * uniform01(rng)});
    CHECK(hv_exact_2d(pts, {10, 10}) == doctest::Approx(oracle::hv_by_strips(pts, 10, 10)).epsilon(1e-12));
  }
}

TEST_CASE("Monte-Carlo hypervolume") {
  const std::vector<ObjectiveVector> one{{1, 1}};
  const double mc = hv_monte_carlo(one, {2, 2}, 200000, RngSeed{1});
  CHECK(std::abs(mc - 25.0) < 4 * 100.0 * std::sqrt(0.25 * 0.75 / 200000));
  CHECK(hv_monte_carlo(std::vector<ObjectiveVector>{}, {2, 2}, 1000, RngSeed{1}) == 0.0);

  const std::vector<ObjectiveVector> stairs{{1, 3}, {2, 2}, {3, 1}};
  CHECK(std::abs(hv_monte_carlo(stairs, {4, 4}, 1'000'000, RngSeed{2}) - 37.5) < 0.5);

  CHECK(hv_monte_carlo(stairs, {4, 4}, 10000, RngSeed{3}) == hv_monte_carlo(stairs, {4, 4}, 10000, RngSeed{3}));
  CHECK(hv_monte_carlo(stairs, {4, 4}, 10000, RngSeed{3}, 4) ==
        hv_monte_carlo(stairs, {4, 4}, 10000, RngSeed{3}, 4));
  CHECK_THROWS_AS(hv_monte_carlo(stairs, {4, 4}, 0, RngSeed{3}), InvalidInput);
}

TEST_CASE("report serialization") {
  RunReport r;
  r.algo = "nsga2";
  r.instance = "i40";
  r.seed = 7;
  r.hv_pct = 61.25;
  r.archive_size = 12;
  r.wall_s = 0.5;
  r.config = R"({"evals":20000})";
  std::ostringstream csv;
  write_report_csv_row(csv, r);
  CHECK(std::string(kReportCsvHeader) == "algo,instance,seed,hv_pct,archive_size,wall_s");
  CHECK(csv.str() == "nsga2,i40,7,61.25,12,0.5\n");
  std::ostringstream js;
  write_report_json_line(js, r);
  CHECK(js.str().find("\"algo\":\"nsga2\"") != std::string::npos);
  CHECK(js.str().find("\"evals\":20000") != std::string::npos);
  CHECK(js.str().back() == '\n');
}
