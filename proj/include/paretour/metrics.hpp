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

// Front quality: hypervolume of a point set inside the box [0, r1] x [0, r2],
// reported as a percentage of the box area, either estimated by uniform
// sampling or computed exactly by a sweep.

#ifndef PARETOUR_METRICS_HPP
#define PARETOUR_METRICS_HPP

#include "paretour/core.hpp"
#include "paretour/random.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace paretour {

struct ReferencePoint {
  double r1 = 1.0;
  double r2 = 1.0;
};

/// (n, n).
ReferencePoint reference_point(int n);

/// Points with a coordinate >= the reference are dropped before measuring.
int count_outside(std::span<const ObjectiveVector> points, const ReferencePoint& ref);

/// Exact dominated-area percentage via sort-and-sweep.
double hv_exact_2d(std::span<const ObjectiveVector> points, const ReferencePoint& ref);
double hv_exact_2d(const ParetoArchive& archive, const ReferencePoint& ref);

/// Percentage of `samples` uniform points of the box dominated by at least
/// one archive point. The budget is split across `workers` threads, each
/// with its own substream, so the estimate depends only on (seed, workers).
double hv_monte_carlo(std::span<const ObjectiveVector> points, const ReferencePoint& ref, long samples,
                      RngSeed seed, int workers = 1);
double hv_monte_carlo(const ParetoArchive& archive, const ReferencePoint& ref, long samples, RngSeed seed,
                      int workers = 1);

struct RunReport {
  std::string algo;
  std::string instance;
  std::uint64_t seed = 0;
  double hv_pct = 0.0;
  std::size_t archive_size = 0;
  double wall_s = 0.0;
  int outside_ref = 0;
  int workers = 1;
  std::string config;  // JSON echo of the run configuration
};

inline constexpr const char* kReportCsvHeader = "algo,instance,seed,hv_pct,archive_size,wall_s";

void write_report_csv_row(std::ostream& os, const RunReport& r);
/// One JSON object per line with every RunReport field.
void write_report_json_line(std::ostream& os, const RunReport& r);

}  // namespace paretour

#endif  // PARETOUR_METRICS_HPP
