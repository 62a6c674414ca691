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

#include "paretour/metrics.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <thread>

namespace paretour {

ReferencePoint reference_point(int n) {
  if (n < 1) throw InvalidInput("reference_point needs n >= 1");
  return {static_cast<double>(n), static_cast<double>(n)};
}

namespace {

bool inside(const ObjectiveVector& p, const ReferencePoint& ref) { return p.f1 < ref.r1 && p.f2 < ref.r2; }

void check_ref(const ReferencePoint& ref) {
  if (!(ref.r1 > 0.0 && ref.r2 > 0.0)) throw InvalidInput("reference point must be positive");
}

// Nondominated points strictly inside the box, f1 ascending / f2 descending.
std::vector<ObjectiveVector> clipped_front(std::span<const ObjectiveVector> points, const ReferencePoint& ref) {
  std::vector<ObjectiveVector> kept;
  for (const auto& p : points)
    if (inside(p, ref)) kept.push_back(p);
  return nondominated_filter(kept);
}

}  // namespace

int count_outside(std::span<const ObjectiveVector> points, const ReferencePoint& ref) {
  return static_cast<int>(std::count_if(points.begin(), points.end(),
                                        [&](const auto& p) { return !inside(p, ref); }));
}

double hv_exact_2d(std::span<const ObjectiveVector> points, const ReferencePoint& ref) {
  check_ref(ref);
  const auto front = clipped_front(points, ref);
  double area = 0.0;
  for (std::size_t i = 0; i < front.size(); ++i) {
    const double right = i + 1 < front.size() ? front[i + 1].f1 : ref.r1;
    area += (right - std::max(front[i].f1, 0.0)) * (ref.r2 - std::max(front[i].f2, 0.0));
  }
  return 100.0 * area / (ref.r1 * ref.r2);
}

double hv_exact_2d(const ParetoArchive& archive, const ReferencePoint& ref) {
  const auto pts = archive.objectives();
  return hv_exact_2d(pts, ref);
}

double hv_monte_carlo(std::span<const ObjectiveVector> points, const ReferencePoint& ref, long samples,
                      RngSeed seed, int workers) {
  check_ref(ref);
  if (samples < 1) throw InvalidInput("hv_monte_carlo needs samples >= 1");
  if (workers < 1) throw InvalidInput("workers must be >= 1");
  const auto front = clipped_front(points, ref);
  if (front.empty()) return 0.0;

  // A sample (x, y) is dominated iff the front point with the largest
  // f1 <= x has f2 <= y.
  auto dominated = [&](double x, double y) {
    auto it = std::upper_bound(front.begin(), front.end(), x,
                               [](double v, const ObjectiveVector& p) { return v < p.f1; });
    return it != front.begin() && std::prev(it)->f2 <= y;
  };

  std::vector<long> hits(static_cast<std::size_t>(workers), 0);
  auto work = [&](int w) {
    Rng rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(w)));
    const long begin = samples * w / workers;
    const long end = samples * (w + 1) / workers;
    long h = 0;
    for (long s = begin; s < end; ++s) {
      const double x = uniform01(rng) * ref.r1;
      const double y = uniform01(rng) * ref.r2;
      h += dominated(x, y);
    }
    hits[static_cast<std::size_t>(w)] = h;
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  long total = 0;
  for (long h : hits) total += h;
  return 100.0 * static_cast<double>(total) / static_cast<double>(samples);
}

double hv_monte_carlo(const ParetoArchive& archive, const ReferencePoint& ref, long samples, RngSeed seed,
                      int workers) {
  const auto pts = archive.objectives();
  return hv_monte_carlo(pts, ref, samples, seed, workers);
}

void write_report_csv_row(std::ostream& os, const RunReport& r) {
  os << r.algo << ',' << r.instance << ',' << r.seed << ',' << std::setprecision(10) << r.hv_pct << ','
     << r.archive_size << ',' << std::setprecision(6) << r.wall_s << '\n';
}

void write_report_json_line(std::ostream& os, const RunReport& r) {
  nlohmann::json j = {{"algo", r.algo},
                      {"instance", r.instance},
                      {"seed", r.seed},
                      {"hv_pct", r.hv_pct},
                      {"archive_size", r.archive_size},
                      {"wall_s", r.wall_s},
                      {"outside_ref", r.outside_ref},
                      {"workers", r.workers}};
  j["config"] = r.config.empty() ? nlohmann::json::object() : nlohmann::json::parse(r.config);
  os << j.dump() << '\n';
}

}  // namespace paretour
