#include "hypis/sdp_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <ostream>

namespace hypis {

Eigen::MatrixXd project_psd(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw ParameterError("project_psd needs a square matrix");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw ParameterError("project_psd needs a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  Eigen::MatrixXd out = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().transpose();
  out = 0.5 * (out + out.transpose()).eval();
  return out;
}

NonconvergenceError::NonconvergenceError(const std::string& what, SdpSolution partial,
                                         ViolationReport report)
    : std::runtime_error(what),
      partial_(std::make_shared<SdpSolution>(std::move(partial))),
      report_(std::make_shared<ViolationReport>(std::move(report))) {}

namespace {

struct RowSet {
  std::vector<const SparseRow*> rows;
  std::vector<double> multipliers;
  std::vector<double> norms;  // squared norms in the symmetric inner product

  explicit RowSet(const SdpProblem& p) {
    for (const auto& r : p.monotone_rows()) rows.push_back(&r);
    for (const auto& r : p.union_bound_rows()) rows.push_back(&r);
    multipliers.assign(rows.size(), 0.0);
    norms.reserve(rows.size());
    for (const SparseRow* r : rows) {
      double acc = 0.0;
      for (const auto& t : r->terms) acc += t.coeff * t.coeff * (t.row == t.col ? 1.0 : 0.5);
      norms.push_back(acc);
    }
  }
};

double max_row_violation(const RowSet& rs, const Eigen::MatrixXd& m) {
  double worst = 0.0;
  for (const SparseRow* r : rs.rows) worst = std::max(worst, r->eval(m));
  return worst;
}

// Augmented-Lagrangian penalty part of the merit function.
double penalty_term(const RowSet& rs, const Eigen::MatrixXd& m, double mu) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rs.rows.size(); ++i) {
    const double shifted = rs.multipliers[i] / mu + rs.rows[i]->eval(m);
    if (shifted > 0) acc += 0.5 * mu * shifted * shifted;
  }
  return acc;
}

void add_row_forces(const RowSet& rs, const Eigen::MatrixXd& m, double mu, Eigen::MatrixXd& grad) {
  for (std::size_t i = 0; i < rs.rows.size(); ++i) {
    const SparseRow& row = *rs.rows[i];
    const double force = std::max(0.0, rs.multipliers[i] + mu * row.eval(m));
    if (force == 0.0) continue;
    for (const auto& t : row.terms) {
      grad(t.row, t.col) -= force * t.coeff;
      if (t.row != t.col) grad(t.col, t.row) -= force * t.coeff;
    }
  }
}

void update_multipliers(RowSet& rs, const Eigen::MatrixXd& m, double mu) {
  for (std::size_t i = 0; i < rs.rows.size(); ++i)
    rs.multipliers[i] = std::max(0.0, rs.multipliers[i] + mu * rs.rows[i]->eval(m));
}

// One sequential sweep of halfspace corrections, in the symmetric-matrix
// metric. Returns the worst violation seen before correcting.
double pocs_row_sweep(const RowSet& rs, Eigen::MatrixXd& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < rs.rows.size(); ++i) {
    const SparseRow& row = *rs.rows[i];
    const double g = row.eval(m);
    if (g <= 0) continue;
    worst = std::max(worst, g);
    const double scale = g / rs.norms[i];
    for (const auto& t : row.terms) {
      const double delta = scale * t.coeff * (t.row == t.col ? 1.0 : 0.5);
      m(t.row, t.col) -= delta;
      if (t.row != t.col) m(t.col, t.row) -= delta;
    }
  }
  return worst;
}

struct BestIterate {
  bool set = false;
  double objective = 0.0;
  double violation = 0.0;
  Eigen::MatrixXd gram;

  void offer(double obj, double viol, const Eigen::MatrixXd& m, double tol) {
    if (viol > tol) return;
    if (!set || obj > objective) {
      set = true;
      objective = obj;
      violation = viol;
      gram = m;
    }
  }
};

}  // namespace

SdpSolution solve(const SdpProblem& problem, const SolverConfig& config, const SdpSolution* warm) {
  const auto t_start = std::chrono::steady_clock::now();
  const auto dim = static_cast<Eigen::Index>(problem.dim());
  if (config.max_iter < 1 || config.tol_feas <= 0 || config.tol_obj <= 0 || config.step <= 0 ||
      config.penalty <= 0)
    throw ParameterError("solver config out of range");

  Eigen::MatrixXd m;
  if (warm != nullptr) {
    if (warm->gram.rows() != dim || warm->gram.cols() != dim)
      throw ParameterError("warm start dimension does not match problem");
    m = warm->gram;
  } else {
    m = Eigen::MatrixXd::Zero(dim, dim);
    for (int v = 0; v < problem.vertex_count(); ++v) m(v, v) = 1.0;
  }
  problem.project_affine(m);

  RowSet rows(problem);
  BestIterate best;
  const double mu = config.penalty;
  double step = config.step;

  // Score the start point so a feasible warm start is never lost.
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.compute(m, Eigen::EigenvaluesOnly);
    const double viol = std::max(max_row_violation(rows, m), std::max(0.0, -es.eigenvalues()(0)));
    best.offer(problem.objective_value(m), viol, m, config.tol_feas);
  }

  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd trial;
  std::deque<double> window;
  int iter = 0;
  int ascent_iters = 0;
  int polish_iters = 0;
  bool plateau = false;

  if (config.progress_csv != nullptr) (*config.progress_csv) << "iter,objective,max_violation,min_eig\n";
  const auto log_line = [&](double obj, double viol, double min_eig) {
    if (config.progress_csv != nullptr)
      (*config.progress_csv) << iter << ',' << obj << ',' << viol << ',' << min_eig << '\n';
  };

  // Phase A: ascent. Ends on an objective plateau or at half the budget.
  const int ascent_cap = config.max_iter / 2;
  while (iter < ascent_cap && !plateau) {
    ++iter;
    ++ascent_iters;

    grad.setZero();
    for (std::uint32_t cls : problem.objective_classes()) grad(cls, cls) += 1.0;
    add_row_forces(rows, m, mu, grad);

    const double merit_before = problem.objective_value(m) - penalty_term(rows, m, mu);
    for (int attempt = 0;; ++attempt) {
      trial = m + step * grad;
      problem.project_affine(trial);
      const double merit_after = problem.objective_value(trial) - penalty_term(rows, trial, mu);
      if (merit_after >= merit_before - 1e-12 || attempt >= 6 || step < 1e-10) break;
      step *= 0.5;
    }
    if (step < config.step) step = std::min(config.step, step * 1.02);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(trial);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    const double min_eig = es.eigenvalues()(0);
    const double viol =
        std::max(max_row_violation(rows, trial), std::max(0.0, -min_eig));
    const double obj = problem.objective_value(trial);
    best.offer(obj, viol, trial, config.tol_feas);
    update_multipliers(rows, trial, mu);
    log_line(obj, viol, min_eig);

    m = es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).asDiagonal() * es.eigenvectors().transpose();
    m = 0.5 * (m + m.transpose()).eval();

    window.push_back(obj);
    if (static_cast<int>(window.size()) > config.plateau_window) window.pop_front();
    if (static_cast<int>(window.size()) == config.plateau_window) {
      const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
      const double scale = std::max(1.0, std::abs(window.back()));
      if (*hi - *lo <= config.tol_obj * config.plateau_window * scale) plateau = true;
    }
  }

  // Phase B: polish. Cyclic projections (halfspaces, affine set, PSD cone)
  // walk the iterate into the feasible intersection; the objective is left
  // alone and only drifts by the distance covered.
  double final_viol = std::numeric_limits<double>::infinity();
  while (iter < config.max_iter) {
    ++iter;
    ++polish_iters;
    pocs_row_sweep(rows, m);
    problem.project_affine(m);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    const double min_eig = es.eigenvalues()(0);
    const double viol = std::max(max_row_violation(rows, m), std::max(0.0, -min_eig));
    const double obj = problem.objective_value(m);
    best.offer(obj, viol, m, config.tol_feas);
    log_line(obj, viol, min_eig);
    final_viol = viol;
    if (viol <= config.tol_feas) break;

    m = es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).asDiagonal() * es.eigenvectors().transpose();
    m = 0.5 * (m + m.transpose()).eval();
  }

  SdpSolution out;
  out.n = problem.vertex_count();
  out.r = problem.uniformity();
  out.max_level = problem.max_level();
  if (best.set) {
    out.gram = best.gram;
    out.meta.max_violation = best.violation;
    out.meta.converged = true;
    out.meta.termination = plateau ? "plateau" : "budget";
  } else {
    out.gram = m;
    problem.project_affine(out.gram);
    out.meta.max_violation = final_viol;
    out.meta.converged = false;
    out.meta.termination = "iteration cap";
  }
  out.meta.iterations = iter;
  out.meta.ascent_iterations = ascent_iters;
  out.meta.polish_iterations = polish_iters;
  out.meta.objective = problem.objective_value(out.gram);
  out.meta.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start).count();

  if (!out.meta.converged && out.meta.max_violation > 10.0 * config.tol_feas) {
    ViolationReport report = verify_feasibility(problem, out, config.tol_feas);
    throw NonconvergenceError("solver hit the iteration cap at violation " +
                                  std::to_string(out.meta.max_violation),
                              std::move(out), std::move(report));
  }
  return out;
}

}  // namespace hypis
