#include "hypis/rounding.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "hypis/combinatorics.hpp"
#include "hypis/subset_index.hpp"

namespace hypis {

std::vector<std::vector<Vertex>> ball(const SdpSolution& solution, const BallSpec& spec) {
  if (spec.tuple_size < 1 || spec.tuple_size > solution.max_level)
    throw ParameterError("ball tuple size outside the solution's levels");
  if (spec.threshold <= 0.0 || spec.threshold >= 1.0)
    throw ParameterError("ball threshold must lie in (0,1)");
  if (spec.tol_round < 0.0) throw ParameterError("tol_round must be nonnegative");
  if (spec.root < 0 || spec.root >= solution.n) throw ParameterError("ball root out of range");

  const SubsetIndex index(solution.n, solution.max_level);
  const auto root_idx = static_cast<Eigen::Index>(spec.root);
  const double cut = spec.threshold - spec.tol_round;
  std::vector<std::vector<Vertex>> members;
  for_each_subset_of(std::span<const int>(spec.candidates), spec.tuple_size,
                     [&](std::span<const int> tuple) {
                       const auto idx = static_cast<Eigen::Index>(index.rank(tuple));
                       if (solution.gram(root_idx, idx) >= cut)
                         members.emplace_back(tuple.begin(), tuple.end());
                     });
  return members;
}

std::vector<Vertex> greedy_complete(const Hypergraph& h, std::span<const Vertex> base,
                                    std::span<const Vertex> order) {
  if (!h.is_independent(base)) throw ParameterError("greedy_complete base is not independent");
  std::vector<Vertex> current(base.begin(), base.end());
  std::sort(current.begin(), current.end());
  for (Vertex v : order) {
    if (std::binary_search(current.begin(), current.end(), v)) continue;
    std::vector<Vertex> tentative = current;
    tentative.insert(std::lower_bound(tentative.begin(), tentative.end(), v), v);
    if (h.is_independent(tentative)) current = std::move(tentative);
  }
  return current;
}

bool RecoveryReport::planted_recovered() const {
  for (const PerRoot& row : per_root)
    if (row.equals_planted) return true;
  return false;
}

nlohmann::json RecoveryReport::to_json() const {
  nlohmann::json roots = nlohmann::json::array();
  for (const PerRoot& row : per_root)
    roots.push_back({{"root", row.root},
                     {"candidate", row.candidate},
                     {"size", row.candidate.size()},
                     {"independent", row.independent},
                     {"equals_planted", row.equals_planted},
                     {"ball_size", row.ball_size}});
  return nlohmann::json{{"per_root", roots},
                        {"distinct_candidates", distinct_candidates},
                        {"best_size", best_size},
                        {"wall_ms", wall_ms}};
}

RecoveryReport algorithm_one(const Hypergraph& h, const SdpSolution& solution, int tuple_size,
                             double threshold, double tol_round,
                             const std::vector<Vertex>* planted) {
  const auto t_start = std::chrono::steady_clock::now();
  const int n = h.vertex_count();
  if (solution.n != n) throw ParameterError("solution and hypergraph disagree on n");

  std::vector<Vertex> everyone(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) everyone[static_cast<std::size_t>(v)] = v;

  RecoveryReport report;
  for (Vertex u = 0; u < n; ++u) {
    BallSpec spec{u, tuple_size, threshold, everyone, tol_round};
    const auto tuples = ball(solution, spec);

    std::vector<char> member(static_cast<std::size_t>(n), 0);
    for (const auto& tuple : tuples)
      for (Vertex v : tuple) member[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> ball_vertices;
    for (int v = 0; v < n; ++v)
      if (member[static_cast<std::size_t>(v)]) ball_vertices.push_back(v);

    RecoveryReport::PerRoot row;
    row.root = u;
    row.ball_size = tuples.size();

    std::vector<Vertex> seeded = ball_vertices;
    if (!member[static_cast<std::size_t>(u)])
      seeded.insert(std::lower_bound(seeded.begin(), seeded.end(), u), u);
    if (h.is_independent(seeded)) {
      // greedy pass over the vertices outside the ball, ascending
      std::vector<Vertex> order;
      for (int v = 0; v < n; ++v)
        if (!member[static_cast<std::size_t>(v)]) order.push_back(v);
      row.candidate = greedy_complete(h, seeded, order);
      row.independent = true;
      row.equals_planted = (planted != nullptr && row.candidate == *planted);
    }
    report.per_root.push_back(std::move(row));
  }

  for (const auto& row : report.per_root) {
    if (row.candidate.empty()) continue;
    if (std::find(report.distinct_candidates.begin(), report.distinct_candidates.end(),
                  row.candidate) == report.distinct_candidates.end())
      report.distinct_candidates.push_back(row.candidate);
    report.best_size = std::max(report.best_size, row.candidate.size());
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start).count();
  return report;
}

double f_const(int r) {
  if (r < 2) throw ParameterError("f_const needs r >= 2");
  return std::pow(r, 2.5) * std::pow(2.0, 3 * r - 2) * std::exp(1.5 * r - 2.0) / std::sqrt(3.0);
}

double k_threshold_large(double n, int r, double p, double eps) {
  if (eps <= 0.0 || eps >= 1.0) throw ParameterError("threshold needs eps in (0,1)");
  if (p <= 0.0 || p > 1.0) throw ParameterError("threshold needs p in (0,1]");
  const double first = r * std::pow(2.0, 2 * r + 2) * std::exp(r) / (3.0 * p);
  const double inv = 1.0 / (r - 0.5);
  const double second = std::pow(2.0 * r * f_const(r), inv) * std::pow(n, (r - 1.0) * inv) /
                        (std::pow(eps, inv) * std::pow(p, 1.0 / (2.0 * r - 1.0)));
  return std::max(first, second);
}

double k_threshold_exact(double n, int r, double p) {
  if (p <= 0.0 || p > 1.0) throw ParameterError("threshold needs p in (0,1]");
  const double first = r * std::pow(2.0, 2 * r + 2) * std::exp(r) / (3.0 * p);
  const double inv = 1.0 / (r - 0.5);
  const double second =
      std::pow(8.0 * f_const(r), inv) * std::pow(n, (r - 1.0) * inv) / std::pow(p, 3.0 / (2.0 * r - 1.0));
  const double third = (r - 1.0) * std::pow(16.0 * std::log(n) / p, 1.0 / (r - 1.0));
  return std::max({first, second, third});
}

}  // namespace hypis
