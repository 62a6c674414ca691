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

// paretour command-line front end.

#include "paretour/baselines.hpp"
#include "paretour/concave.hpp"
#include "paretour/core.hpp"
#include "paretour/decomposition.hpp"
#include "paretour/instances.hpp"
#include "paretour/io.hpp"
#include "paretour/metrics.hpp"
#include "paretour/policy.hpp"
#include "paretour/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace paretour;

namespace {

enum Exit : int { kOk = 0, kIoError = 1, kUsage = 2, kInfeasible = 3, kNumerical = 4 };

struct GenOptions {
  std::string kind;
  int n = 40;
  int width = 30;
  int height = 30;
  double density = 0.2;
  std::string map_out;
};

struct SolveOptions {
  std::string algo = "search";
  std::vector<std::string> algos{"search", "nsga2", "moead", "wsum"};
  std::string instance;
  std::string output = "archive.json";
  int prefs = 100;
  int weights = 100;
  // search
  int rounds = SearchConfig{}.outer_rounds;
  int moves = SearchConfig{}.inner_moves;
  int restarts = SearchConfig{}.restarts;
  double epsilon = SearchConfig{}.epsilon_g;
  bool no_warm_start = false;
  // multipliers
  double alpha = MultiplierConfig{}.alpha;
  double lambda_max = MultiplierConfig{}.lambda_max;
  // evolutionary
  long evals = EvoConfig{}.evaluations;
  int pop = EvoConfig{}.population;
  double crossover = EvoConfig{}.crossover_rate;
  double mutation = EvoConfig{}.mutation_rate;
  int neighbors = EvoConfig{}.neighborhood_T;
  // policy
  std::string checkpoint;
  int samples_per_pref = 16;
};

struct TrainOptions {
  int n = 20;
  int K = 20;
  int iterations = TrainConfig{}.iterations;
  int batch = TrainConfig{}.batch;
  double eta_actor = TrainConfig{}.eta_actor;
  double eta_critic = TrainConfig{}.eta_critic;
  double alpha = MultiplierConfig{}.alpha;
  double lambda_max = MultiplierConfig{}.lambda_max;
  bool no_pref_features = false;
  std::string output = "checkpoint.json";
  std::string log;
};

struct EvalOptions {
  std::string archive;
  std::string instance;
  int n = 0;
  std::vector<double> ref;
  long samples = 1'000'000;
};

struct ReportOptions {
  std::string csv;
  std::string jsonl;
  long hv_samples = 0;  // 0: exact only
  std::vector<double> ref;
};

struct ConcaveOptions {
  int K = 20;
  int weights = 100;
  std::string output = "concave.csv";
};

struct Common {
  std::uint64_t seed = 0;
  int jobs = 1;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void append_report(const ReportOptions& r, const RunReport& row) {
  if (!r.csv.empty()) {
    const bool fresh = !fs::exists(r.csv) || fs::file_size(r.csv) == 0;
    std::ofstream os(r.csv, std::ios::app);
    if (!os) throw std::runtime_error("cannot open report " + r.csv);
    if (fresh) os << kReportCsvHeader << '\n';
    write_report_csv_row(os, row);
  }
  if (!r.jsonl.empty()) {
    std::ofstream os(r.jsonl, std::ios::app);
    if (!os) throw std::runtime_error("cannot open report " + r.jsonl);
    write_report_json_line(os, row);
  }
}

ReferencePoint resolve_ref(const std::vector<double>& ref, int n) {
  if (ref.empty()) return reference_point(n);
  return {ref[0], ref[1]};
}

SearchConfig search_config(const SolveOptions& o, const Common& c) {
  SearchConfig cfg;
  cfg.outer_rounds = o.rounds;
  cfg.inner_moves = o.moves;
  cfg.restarts = o.restarts;
  cfg.epsilon_g = o.epsilon;
  cfg.warm_start = !o.no_warm_start;
  cfg.jobs = c.jobs;
  cfg.seed = RngSeed{c.seed};
  cfg.multipliers.alpha = o.alpha;
  cfg.multipliers.lambda_max = o.lambda_max;
  return cfg;
}

EvoConfig evo_config(const SolveOptions& o, const Common& c) {
  EvoConfig cfg;
  cfg.population = o.pop;
  cfg.evaluations = o.evals;
  cfg.crossover_rate = o.crossover;
  cfg.mutation_rate = o.mutation;
  cfg.neighborhood_T = o.neighbors;
  cfg.seed = RngSeed{c.seed};
  return cfg;
}

struct SolveOutcome {
  ParetoArchive archive;
  json config;
};

SolveOutcome run_algorithm(const std::string& algo, const BtspInstance& inst, const SolveOptions& o,
                           const Common& c) {
  json config{{"algo", algo}, {"seed", c.seed}};
  if (algo == "search") {
    const auto cfg = search_config(o, c);
    config.update({{"prefs", o.prefs},
                   {"rounds", cfg.outer_rounds},
                   {"moves", cfg.inner_moves},
                   {"restarts", cfg.restarts},
                   {"epsilon", cfg.epsilon_g},
                   {"warm_start", cfg.warm_start},
                   {"alpha", cfg.multipliers.alpha},
                   {"lambda_max", cfg.multipliers.lambda_max},
                   {"jobs", cfg.jobs}});
    return {solve_front(inst, generate_preferences(o.prefs), cfg).archive, config};
  }
  if (algo == "nsga2" || algo == "moead") {
    const auto cfg = evo_config(o, c);
    config.update({{"evals", cfg.evaluations},
                   {"pop", cfg.population},
                   {"crossover", cfg.crossover_rate},
                   {"mutation", cfg.mutation_rate}});
    if (algo == "nsga2") return {nsga2(inst, cfg).archive, config};
    config.update({{"prefs", o.prefs}, {"neighbors", cfg.neighborhood_T}});
    return {moead(inst, cfg, o.prefs).archive, config};
  }
  if (algo == "wsum") {
    const auto cfg = search_config(o, c);
    const auto alphas = uniform_weights(o.weights);
    config.update({{"weights", o.weights}, {"rounds", cfg.outer_rounds}, {"moves", cfg.inner_moves}});
    return {weighted_sum(inst, alphas, cfg), config};
  }
  if (algo == "policy") {
    if (o.checkpoint.empty()) throw InvalidInput("--algo policy needs --checkpoint");
    const Checkpoint ck = checkpoint_from_json(read_json_file(o.checkpoint));
    config.update({{"prefs", o.prefs},
                   {"samples_per_pref", o.samples_per_pref},
                   {"checkpoint", o.checkpoint},
                   {"feature_schema", ck.policy.feature_schema()}});
    return {infer_front(ck.policy, inst, generate_preferences(o.prefs), o.samples_per_pref, RngSeed{c.seed}),
            config};
  }
  throw InvalidInput("unknown algorithm '" + algo + "'");
}

RunReport solve_once(const std::string& algo, const InstanceFile& file, const std::string& instance_name,
                     const SolveOptions& o, const ReportOptions& r, const Common& c, const std::string& out) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveOutcome res = run_algorithm(algo, file.instance, o, c);
  const double wall = seconds_since(t0);
  if (!out.empty()) write_json_file(out, archive_to_json(res.archive));

  const auto ref = resolve_ref(r.ref, file.instance.size());
  const auto pts = res.archive.objectives();
  RunReport row;
  row.algo = algo;
  row.instance = instance_name;
  row.seed = c.seed;
  row.hv_pct = r.hv_samples > 0 ? hv_monte_carlo(pts, ref, r.hv_samples, RngSeed{c.seed}, c.jobs)
                                : hv_exact_2d(pts, ref);
  row.archive_size = res.archive.size();
  row.wall_s = wall;
  row.outside_ref = count_outside(pts, ref);
  row.workers = c.jobs;
  res.config["ref"] = {ref.r1, ref.r2};
  row.config = res.config.dump();
  append_report(r, row);
  std::cout << algo << ": " << row.archive_size << " points, HV " << row.hv_pct << "% (ref " << ref.r1 << ", "
            << ref.r2 << "), " << row.wall_s << " s";
  if (row.outside_ref > 0) std::cout << ", " << row.outside_ref << " outside ref";
  std::cout << '\n';
  return row;
}

int cmd_gen(const GenOptions& o, const Common& c, const std::string& out) {
  json j;
  if (o.kind == "euclidean") {
    j = instance_to_json(BtspInstance(gen_euclidean(o.n, RngSeed{c.seed})), c.seed);
  } else {
    const auto cov = gen_coverage(o.width, o.height, o.density, o.n, RngSeed{c.seed});
    json points = json::array();
    for (const auto& p : cov.points) points.push_back({p.row, p.col});
    json meta{{"generator", "coverage"}, {"density", o.density}, {"map", gridmap_to_json(cov.map)},
              {"points", points}};
    j = instance_to_json(BtspInstance(cov.instance), c.seed, meta);
    if (!o.map_out.empty()) write_json_file(o.map_out, gridmap_to_json(cov.map));
  }
  write_json_file(out, j);
  std::cout << out << " seed " << c.seed << '\n';
  return kOk;
}

int cmd_train(const TrainOptions& o, const Common& c) {
  TrainConfig cfg;
  cfg.iterations = o.iterations;
  cfg.batch = o.batch;
  cfg.K = o.K;
  cfg.eta_actor = o.eta_actor;
  cfg.eta_critic = o.eta_critic;
  cfg.multipliers.alpha = o.alpha;
  cfg.multipliers.lambda_max = o.lambda_max;
  cfg.preference_features = !o.no_pref_features;
  cfg.seed = RngSeed{c.seed};
  const int n = o.n;
  if (n < 2) throw InvalidInput("--n must be >= 2");
  const InstanceSampler sampler = [n](Rng& rng) { return BtspInstance(gen_euclidean(n, RngSeed{rng()})); };
  const auto t0 = std::chrono::steady_clock::now();
  const TrainResult res = train(sampler, cfg);
  write_json_file(o.output, checkpoint_to_json({res.policy, res.critic, res.multipliers.lambdas}), 2);
  if (!o.log.empty()) {
    std::ofstream os(o.log);
    if (!os) throw std::runtime_error("cannot open log " + o.log);
    os << "iteration";
    for (int k = 0; k < cfg.K; ++k) os << ",L" << k;
    os << '\n';
    for (Eigen::Index it = 0; it < res.mean_reward.rows(); ++it) {
      os << it;
      for (Eigen::Index k = 0; k < res.mean_reward.cols(); ++k) os << ',' << res.mean_reward(it, k);
      os << '\n';
    }
  }
  const auto& L = res.mean_reward;
  std::cout << "trained " << cfg.iterations << " iterations in " << seconds_since(t0) << " s; mean L "
            << L.row(0).mean() << " -> " << L.row(L.rows() - 1).mean() << "; wrote " << o.output << '\n';
  return kOk;
}

int cmd_eval(const EvalOptions& o, const ReportOptions& r, const Common& c) {
  const ParetoArchive archive = archive_from_json(read_json_file(o.archive));
  int n = o.n;
  std::string name = fs::path(o.archive).stem().string();
  if (!o.instance.empty()) {
    n = instance_from_json(read_json_file(o.instance)).instance.size();
    name = fs::path(o.instance).stem().string();
  } else if (n == 0 && !archive.empty()) {
    n = archive.entries().front().tour.size();
  }
  if (o.ref.empty() && n < 1) throw InvalidInput("cannot infer n; pass --instance, --n or --ref");
  const auto ref = resolve_ref(o.ref, n);
  const auto pts = archive.objectives();
  const double exact = hv_exact_2d(pts, ref);
  const double mc = hv_monte_carlo(pts, ref, o.samples, RngSeed{c.seed}, c.jobs);
  std::cout << "ref " << ref.r1 << ' ' << ref.r2 << "\nhv_exact " << exact << "\nhv_mc " << mc << "\nsize "
            << archive.size() << "\noutside_ref " << count_outside(pts, ref) << '\n';
  RunReport row;
  row.algo = "eval";
  row.instance = name;
  row.seed = c.seed;
  row.hv_pct = mc;
  row.archive_size = archive.size();
  row.outside_ref = count_outside(pts, ref);
  row.workers = c.jobs;
  row.config = json{{"samples", o.samples}, {"ref", {ref.r1, ref.r2}}, {"hv_exact", exact}}.dump();
  append_report(r, row);
  return kOk;
}

int cmd_demo_concave(const ConcaveOptions& o) {
  const ConcaveDemo demo = run_concave_demo(o.K, o.weights);
  std::ofstream os(o.output);
  if (!os) throw std::runtime_error("cannot open " + o.output);
  write_concave_csv(os, demo.rows);
  std::cout << "decomposition: " << demo.decomposition_distinct << " distinct nondominated points ("
            << demo.decomposition_interior << " interior)\n"
            << "scalarization: " << demo.scalarization_clusters << " clusters at radius 0.05\n"
            << "wrote " << o.output << '\n';
  return kOk;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Random seed")->envname("PARETO_TOUR_SEED");
  sub->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void add_report(CLI::App* sub, ReportOptions& r) {
  sub->add_option("--report", r.csv, "Append a CSV report row");
  sub->add_option("--report-json", r.jsonl, "Append a JSON-lines report row");
  sub->add_option("--hv-samples", r.hv_samples, "Monte-Carlo HV samples (0 = exact)")->check(CLI::NonNegativeNumber);
  sub->add_option("--ref", r.ref, "Reference point r1 r2")->expected(2);
}

void add_solver_options(CLI::App* sub, SolveOptions& o) {
  sub->add_option("-i,--instance", o.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  sub->add_option("--prefs", o.prefs, "Number of preferences / subproblems")->check(CLI::PositiveNumber);
  sub->add_option("--weights", o.weights, "Scalarization weights")->check(CLI::PositiveNumber);
  sub->add_option("--rounds", o.rounds, "Multiplier rounds per preference")->check(CLI::PositiveNumber);
  sub->add_option("--moves", o.moves, "Local-search proposals per round")->check(CLI::PositiveNumber);
  sub->add_option("--restarts", o.restarts, "Chains per preference")->check(CLI::PositiveNumber);
  sub->add_option("--epsilon", o.epsilon, "Cone tolerance");
  sub->add_flag("--no-warm-start", o.no_warm_start, "Solve preferences independently");
  sub->add_option("--alpha", o.alpha, "Multiplier step size");
  sub->add_option("--lambda-max", o.lambda_max, "Multiplier upper bound");
  sub->add_option("--evals", o.evals, "Evaluation budget")->check(CLI::PositiveNumber);
  sub->add_option("--pop", o.pop, "Population size")->check(CLI::PositiveNumber);
  sub->add_option("--crossover", o.crossover, "Crossover rate");
  sub->add_option("--mutation", o.mutation, "Mutation rate");
  sub->add_option("--neighbors", o.neighbors, "MOEA/D neighbourhood size")->check(CLI::PositiveNumber);
  sub->add_option("--checkpoint", o.checkpoint, "Policy checkpoint")->check(CLI::ExistingFile);
  sub->add_option("--samples-per-pref", o.samples_per_pref, "Policy samples per preference")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-objective TSP Pareto-front toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Config file (TOML/INI); flags override")->check(CLI::ExistingFile);
  app.allow_config_extras(CLI::config_extras_mode::error);

  Common common;
  std::string out;

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", gen.kind, "euclidean | coverage")
      ->required()
      ->check(CLI::IsMember({"euclidean", "coverage"}));
  gen_cmd->add_option("--n", gen.n, "Number of cities / points")->check(CLI::Range(2, 100000));
  gen_cmd->add_option("--width", gen.width, "Grid width");
  gen_cmd->add_option("--height", gen.height, "Grid height");
  gen_cmd->add_option("--density", gen.density, "Obstacle density");
  gen_cmd->add_option("--map-out", gen.map_out, "Also write the grid map");
  gen_cmd->add_option("-o,--output", out, "Output file")->required();
  add_common(gen_cmd, common);

  SolveOptions solve;
  ReportOptions report;
  auto* solve_cmd = app.add_subcommand("solve", "Approximate the Pareto front of an instance");
  solve_cmd->add_option("--algo", solve.algo, "search | policy | nsga2 | moead | wsum")
      ->check(CLI::IsMember({"search", "policy", "nsga2", "moead", "wsum"}));
  solve_cmd->add_option("-o,--output", solve.output, "Archive output");
  add_solver_options(solve_cmd, solve);
  add_report(solve_cmd, report);
  add_common(solve_cmd, common);

  TrainOptions tr;
  auto* train_cmd = app.add_subcommand("train", "Train the preference-conditioned policy");
  train_cmd->add_option("--n", tr.n, "Cities per training instance");
  train_cmd->add_option("--K,--prefs", tr.K, "Training preferences")->check(CLI::PositiveNumber);
  train_cmd->add_option("--iterations", tr.iterations, "Training iterations")->check(CLI::PositiveNumber);
  train_cmd->add_option("--batch", tr.batch, "Instances per iteration")->check(CLI::PositiveNumber);
  train_cmd->add_option("--eta-actor", tr.eta_actor, "Actor step size");
  train_cmd->add_option("--eta-critic", tr.eta_critic, "Critic step size");
  train_cmd->add_option("--alpha", tr.alpha, "Multiplier step size");
  train_cmd->add_option("--lambda-max", tr.lambda_max, "Multiplier upper bound");
  train_cmd->add_flag("--no-pref-features", tr.no_pref_features, "Drop preference features (ablation)");
  train_cmd->add_option("-o,--output", tr.output, "Checkpoint output");
  train_cmd->add_option("--log", tr.log, "Per-iteration mean reward CSV");
  add_common(train_cmd, common);

  SolveOptions infer;
  infer.algo = "policy";
  ReportOptions infer_report;
  auto* infer_cmd = app.add_subcommand("infer", "Decode a front with a trained policy");
  infer_cmd->add_option("-o,--output", infer.output, "Archive output");
  infer_cmd->add_option("--checkpoint", infer.checkpoint, "Policy checkpoint")->required()->check(CLI::ExistingFile);
  infer_cmd->add_option("-i,--instance", infer.instance, "Instance JSON")->required()->check(CLI::ExistingFile);
  infer_cmd->add_option("--prefs", infer.prefs, "Inference preferences")->check(CLI::PositiveNumber);
  infer_cmd->add_option("--samples-per-pref", infer.samples_per_pref, "Samples per preference")
      ->check(CLI::PositiveNumber);
  add_report(infer_cmd, infer_report);
  add_common(infer_cmd, common);

  EvalOptions ev;
  ReportOptions eval_report;
  auto* eval_cmd = app.add_subcommand("eval", "Hypervolume of an archive");
  eval_cmd->add_option("--archive", ev.archive, "Archive JSON")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--instance", ev.instance, "Instance JSON (for n)")->check(CLI::ExistingFile);
  eval_cmd->add_option("--n", ev.n, "Instance size for the default reference point");
  eval_cmd->add_option("--ref", ev.ref, "Reference point r1 r2")->expected(2);
  eval_cmd->add_option("--samples", ev.samples, "Monte-Carlo samples")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--report", eval_report.csv, "Append a CSV report row");
  eval_cmd->add_option("--report-json", eval_report.jsonl, "Append a JSON-lines report row");
  add_common(eval_cmd, common);

  SolveOptions cmp;
  ReportOptions cmp_report;
  std::string cmp_dir;
  auto* compare_cmd = app.add_subcommand("compare", "Run several algorithms on one instance");
  compare_cmd->add_option("--algos", cmp.algos, "Algorithms to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"search", "policy", "nsga2", "moead", "wsum"}));
  compare_cmd->add_option("--out-dir", cmp_dir, "Write <algo>.json archives here");
  add_solver_options(compare_cmd, cmp);
  add_report(compare_cmd, cmp_report);
  add_common(compare_cmd, common);

  ConcaveOptions cc;
  auto* concave_cmd = app.add_subcommand("demo-concave", "Decomposition versus scalarization on a concave front");
  concave_cmd->add_option("--k", cc.K, "Preferences")->check(CLI::PositiveNumber);
  concave_cmd->add_option("--weights", cc.weights, "Scalarization weights")->check(CLI::PositiveNumber);
  concave_cmd->add_option("-o,--output", cc.output, "CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, common, out);
    if (*solve_cmd || *infer_cmd) {
      const SolveOptions& o = *solve_cmd ? solve : infer;
      const ReportOptions& r = *solve_cmd ? report : infer_report;
      const InstanceFile file = instance_from_json(read_json_file(o.instance));
      solve_once(o.algo, file, fs::path(o.instance).stem().string(), o, r, common, o.output);
      std::cout << "wrote " << o.output << '\n';
      return kOk;
    }
    if (*train_cmd) return cmd_train(tr, common);
    if (*eval_cmd) return cmd_eval(ev, eval_report, common);
    if (*compare_cmd) {
      const InstanceFile file = instance_from_json(read_json_file(cmp.instance));
      if (!cmp_dir.empty()) fs::create_directories(cmp_dir);
      for (const auto& algo : cmp.algos) {
        const std::string path = cmp_dir.empty() ? std::string() : (fs::path(cmp_dir) / (algo + ".json")).string();
        solve_once(algo, file, fs::path(cmp.instance).stem().string(), cmp, cmp_report, common, path);
      }
      return kOk;
    }
    if (*concave_cmd) return cmd_demo_concave(cc);
  } catch (const InfeasibleInstance& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}
