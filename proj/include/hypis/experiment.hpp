#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hypis/planted_model.hpp"
#include "hypis/rounding.hpp"
#include "hypis/sdp_solver.hpp"

namespace hypis {

enum class RunMode { exact_recovery, large_is, lemma_checks };

RunMode parse_run_mode(const std::string& text);
std::string format_run_mode(RunMode mode);

struct PointSpec {
  int n = 0;
  int k = 0;  // ignored when k_auto is set
  int r = 2;
  double p = 0.0;
  double eps = 0.5;  // feeds the large-IS threshold when k is auto
  bool k_auto = false;
  InsideStrategy inside;
  AdversaryStrategy adversary;

  /// Resolves "auto" k from the threshold formulas, clamped into [1, n/2].
  /// The formula constants are astronomical at desk scale, so the clamp is
  /// expected to fire; `clamped` reports that.
  int resolve_k(RunMode mode, bool* clamped = nullptr) const;
};

struct ResultRow {
  std::uint64_t seed = 0;
  int n = 0, k = 0, r = 0;
  double p = 0.0;
  std::string mode, inside, adversary;
  double sdp_objective = 0.0;
  double max_violation = 0.0;
  int iterations = 0;
  bool solver_converged = true;
  std::size_t best_size = 0;
  bool recovered_exactly = false;
  // lemma_checks mode only; empty cells otherwise
  std::optional<double> boundary_mass_gap;
  std::optional<bool> total_bound_pass;
  std::optional<bool> count_bounds_pass;
  double wall_ms = 0.0;  // timing column, excluded from determinism checks

  static std::string csv_header();
  std::string to_csv() const;
};

/// generate -> build -> solve (warm-started from the planted reference) ->
/// round -> verify. Solver nonconvergence is recorded in the row and the
/// pipeline continues with the partial solution.
ResultRow run_single(const PointSpec& point, std::uint64_t seed, const SolverConfig& solver,
                     RunMode mode, const std::filesystem::path* artifact_dir = nullptr);

struct ExperimentConfig {
  std::vector<PointSpec> grid;
  int trials = 1;
  std::uint64_t base_seed = 1;
  SolverConfig solver;
  RunMode mode = RunMode::exact_recovery;
  std::filesystem::path output_dir;
  bool write_artifacts = true;
};

struct ExperimentResult {
  std::filesystem::path csv_path;
  std::filesystem::path summary_path;
  std::size_t row_count = 0;
};

/// One row per (point, trial); trials run in a pool capped by TOOL_THREADS,
/// rows assembled in deterministic order. Rerunning the same config yields
/// byte-identical CSV except for the timing column.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Strips the trailing wall_ms column from every line; what determinism
/// guarantees are stated over.
std::string strip_timing_columns(const std::string& csv_text);

}  // namespace hypis
