#pragma once

#include <iosfwd>
#include <memory>

#include <Eigen/Dense>

#include "hypis/sdp_problem.hpp"
#include "hypis/sdp_solution.hpp"

namespace hypis {

struct SolverConfig {
  int max_iter = 20000;
  /// Target on the largest constraint violation of the returned solution.
  double tol_feas = 1e-5;
  /// Per-iteration relative objective drift below which the ascent phase is
  /// considered flat (measured over plateau_window trailing iterations).
  double tol_obj = 1e-7;
  /// Initial ascent step; halved by backtracking on the objective+penalty
  /// merit, allowed to recover afterwards.
  double step = 0.08;
  /// Augmented-Lagrangian weight for the inequality rows.
  double penalty = 4.0;
  /// Reserved for randomized starts; the default start is deterministic.
  std::uint64_t seed = 0;
  int plateau_window = 100;
  /// When set, receives "iter,objective,max_violation,min_eig" CSV lines.
  std::ostream* progress_csv = nullptr;
};

/// Nearest (Frobenius) positive semidefinite matrix: eigendecompose, clip
/// negative eigenvalues, reconstruct. Input must be symmetric to 1e-12.
Eigen::MatrixXd project_psd(const Eigen::MatrixXd& m);

/// Thrown when the iteration cap is hit with the best violation still above
/// 10 * tol_feas. Carries the partial solution and its report.
class NonconvergenceError : public std::runtime_error {
 public:
  NonconvergenceError(const std::string& what, SdpSolution partial, ViolationReport report);
  const SdpSolution& partial() const { return *partial_; }
  const ViolationReport& report() const { return *report_; }

 private:
  std::shared_ptr<SdpSolution> partial_;
  std::shared_ptr<ViolationReport> report_;
};

/// Deterministic first-order maximization of the compiled SDP.
///
/// Operator splitting: (a) gradient ascent on the linear objective plus
/// augmented-Lagrangian terms for the inequality rows, (b) exact projection
/// onto the pinned/union-class affine set, (c) projection onto the PSD cone
/// by full eigendecomposition. Once the objective goes flat a polish phase
/// restores feasibility by cyclic projections. The returned Gram is the
/// best iterate whose violation reached tol_feas (so a feasible warm start
/// can only improve), with exact class ties.
SdpSolution solve(const SdpProblem& problem, const SolverConfig& config = {},
                  const SdpSolution* warm = nullptr);

}  // namespace hypis
