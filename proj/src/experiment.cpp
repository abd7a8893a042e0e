#include "hypis/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hypis/analysis.hpp"
#include "hypis/instance_json.hpp"
#include "hypis/sdp_solution.hpp"

namespace hypis {

namespace {

std::string fmt(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

RunMode parse_run_mode(const std::string& text) {
  if (text == "exact_recovery") return RunMode::exact_recovery;
  if (text == "large_is") return RunMode::large_is;
  if (text == "lemma_checks") return RunMode::lemma_checks;
  throw ParameterError("unknown mode: " + text);
}

std::string format_run_mode(RunMode mode) {
  switch (mode) {
    case RunMode::exact_recovery: return "exact_recovery";
    case RunMode::large_is: return "large_is";
    case RunMode::lemma_checks: return "lemma_checks";
  }
  return "exact_recovery";
}

int PointSpec::resolve_k(RunMode mode, bool* clamped) const {
  if (!k_auto) {
    if (clamped != nullptr) *clamped = false;
    return k;
  }
  const double raw = (mode == RunMode::large_is) ? k_threshold_large(n, r, p, eps)
                                                 : k_threshold_exact(n, r, p);
  const int limit = n / 2;
  int resolved = static_cast<int>(std::ceil(raw));
  const bool was_clamped = resolved > limit || resolved < 1;
  resolved = std::clamp(resolved, 1, limit);
  if (clamped != nullptr) *clamped = was_clamped;
  return resolved;
}

std::string ResultRow::csv_header() {
  return "seed,n,k,r,p,mode,inside,adversary,sdp_objective,max_violation,iterations,"
         "solver_converged,best_size,recovered_exactly,boundary_mass_gap,total_bound_pass,"
         "count_bounds_pass,wall_ms";
}

std::string ResultRow::to_csv() const {
  std::ostringstream out;
  out << seed << ',' << n << ',' << k << ',' << r << ',' << fmt(p) << ',' << mode << ',' << inside
      << ',' << adversary << ',' << fmt(sdp_objective) << ',' << fmt(max_violation) << ','
      << iterations << ',' << (solver_converged ? 1 : 0) << ',' << best_size << ','
      << (recovered_exactly ? 1 : 0) << ',';
  if (boundary_mass_gap) out << fmt(*boundary_mass_gap);
  out << ',';
  if (total_bound_pass) out << (*total_bound_pass ? 1 : 0);
  out << ',';
  if (count_bounds_pass) out << (*count_bounds_pass ? 1 : 0);
  out << ',' << fmt(wall_ms);
  return out.str();
}

ResultRow run_single(const PointSpec& point, std::uint64_t seed, const SolverConfig& solver,
                     RunMode mode, const std::filesystem::path* artifact_dir) {
  const auto t_start = std::chrono::steady_clock::now();
  bool clamped = false;
  const int k = point.resolve_k(mode, &clamped);
  if (clamped)
    std::cerr << "note: auto k clamped to " << k << " for n=" << point.n
              << " (the asymptotic threshold exceeds n/2 at desk scale)\n";

  ModelParams params;
  params.n = point.n;
  params.k = k;
  params.r = point.r;
  params.p = point.p;
  params.inside = point.inside;
  params.adversary = point.adversary;
  const PlantedInstance instance = generate_planted(params, seed);

  std::string tag;
  if (artifact_dir != nullptr) {
    std::ostringstream name;
    name << "n" << params.n << "_k" << params.k << "_r" << params.r << "_p" << fmt(params.p) << "_s"
         << seed;
    tag = name.str();
    save_instance((*artifact_dir / ("instance_" + tag + ".json")).string(), instance);
  }

  const SdpProblem problem = SdpProblem::build(instance.hypergraph);
  const SdpSolution reference = planted_reference_solution(instance);

  SdpSolution solution;
  bool converged = true;
  try {
    solution = solve(problem, solver, &reference);
  } catch (const NonconvergenceError& e) {
    solution = e.partial();
    converged = false;
  }

  const int l = (mode == RunMode::large_is) ? 1 : params.r - 1;
  const double threshold = (mode == RunMode::large_is) ? 1.0 - 1.0 / (2.0 * params.r) : 0.75;
  const RecoveryReport recovery =
      algorithm_one(instance.hypergraph, solution, l, threshold, 1e-3, &instance.planted_set);

  const ViolationReport verification = verify_feasibility(problem, solution, solver.tol_feas);

  ResultRow row;
  row.seed = seed;
  row.n = params.n;
  row.k = params.k;
  row.r = params.r;
  row.p = params.p;
  row.mode = format_run_mode(mode);
  row.inside = params.inside.format();
  row.adversary = params.adversary.format();
  row.sdp_objective = problem.objective_value(solution.gram);
  row.max_violation = verification.overall;
  row.iterations = solution.meta.iterations;
  row.solver_converged = converged;
  row.best_size = recovery.best_size;
  row.recovered_exactly = recovery.planted_recovered();

  if (mode == RunMode::lemma_checks) {
    row.boundary_mass_gap =
        params.p > 0 ? boundary_mass_identity(solution, instance).gap : 0.0;
    row.total_bound_pass = check_total_bound(solution, instance, converged, solver.tol_feas).pass;
    row.count_bounds_pass = count_bounds(params.n, params.k, params.r).all_hold;
  }

  if (artifact_dir != nullptr) {
    std::ofstream report_out(*artifact_dir / ("report_" + tag + ".json"));
    report_out << recovery.to_json().dump(2) << "\n";
  }

  row.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start).count();
  return row;
}

namespace {

int pool_width(std::size_t task_count) {
  int width = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TOOL_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) width = parsed;
  }
  width = std::max(1, std::min<int>(width, static_cast<int>(task_count)));
  return width;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.grid.empty()) throw ParameterError("experiment grid is empty");
  if (config.trials < 1) throw ParameterError("experiment needs trials >= 1");

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  const auto csv_path = config.output_dir / "results.csv";
  const auto summary_path = config.output_dir / "summary.json";
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw IoError("cannot write results to " + csv_path.string());
  std::filesystem::path artifacts = config.output_dir / "artifacts";
  if (config.write_artifacts) {
    std::filesystem::create_directories(artifacts, ec);
    if (ec) throw IoError("cannot create artifact directory " + artifacts.string());
  }

  struct Task {
    std::size_t point_index;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (std::size_t pi = 0; pi < config.grid.size(); ++pi)
    for (int t = 0; t < config.trials; ++t)
      tasks.push_back({pi, config.base_seed + static_cast<std::uint64_t>(t)});

  std::vector<ResultRow> rows(tasks.size());
  std::vector<std::string> errors(tasks.size());
  std::atomic<std::size_t> cursor{0};
  const int width = pool_width(tasks.size());

  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      try {
        rows[i] = run_single(config.grid[task.point_index], task.seed, config.solver, config.mode,
                             config.write_artifacts ? &artifacts : nullptr);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (width == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < width; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  for (std::size_t i = 0; i < tasks.size(); ++i)
    if (!errors[i].empty())
      throw std::runtime_error("experiment task " + std::to_string(i) + " failed: " + errors[i]);

  csv << ResultRow::csv_header() << "\n";
  for (const ResultRow& row : rows) csv << row.to_csv() << "\n";
  csv.close();

  // Per-point recovery rates.
  nlohmann::json points = nlohmann::json::array();
  for (std::size_t pi = 0; pi < config.grid.size(); ++pi) {
    int recovered = 0;
    double mean_obj = 0.0, mean_best = 0.0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (tasks[i].point_index != pi) continue;
      recovered += rows[i].recovered_exactly ? 1 : 0;
      mean_obj += rows[i].sdp_objective;
      mean_best += static_cast<double>(rows[i].best_size);
    }
    const auto trials = static_cast<double>(config.trials);
    const PointSpec& point = config.grid[pi];
    points.push_back({{"n", point.n},
                      {"k", point.resolve_k(config.mode)},
                      {"r", point.r},
                      {"p", point.p},
                      {"inside", point.inside.format()},
                      {"adversary", point.adversary.format()},
                      {"trials", config.trials},
                      {"recovered", recovered},
                      {"recovery_rate", recovered / trials},
                      {"mean_objective", mean_obj / trials},
                      {"mean_best_size", mean_best / trials}});
  }
  nlohmann::json summary{{"mode", format_run_mode(config.mode)},
                         {"base_seed", config.base_seed},
                         {"points", points}};
  std::ofstream summary_out(summary_path, std::ios::binary);
  summary_out << summary.dump(2) << "\n";

  return {csv_path, summary_path, tasks.size()};
}

std::string strip_timing_columns(const std::string& csv_text) {
  std::istringstream in(csv_text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    const auto cut = line.rfind(',');
    out << (cut == std::string::npos ? line : line.substr(0, cut)) << "\n";
  }
  return out.str();
}

}  // namespace hypis
