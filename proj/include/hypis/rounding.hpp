#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "hypis/hypergraph.hpp"
#include "hypis/sdp_solution.hpp"

namespace hypis {

/// Ball around a root vertex: the l-tuples from a candidate set whose
/// moment vectors project at least `threshold` onto the root's vector.
struct BallSpec {
  Vertex root = 0;
  int tuple_size = 1;
  double threshold = 0.75;            // in (0, 1)
  std::vector<Vertex> candidates;     // sorted; the set T
  double tol_round = 1e-3;            // slack for near-feasible solutions
};

/// All I in C(T, l) with <x_root, x_I> >= threshold - tol_round.
std::vector<std::vector<Vertex>> ball(const SdpSolution& solution, const BallSpec& spec);

/// Adds vertices of `order` one at a time while independence is preserved.
/// `base` must be independent; the result is independent and maximal.
std::vector<Vertex> greedy_complete(const Hypergraph& h, std::span<const Vertex> base,
                                    std::span<const Vertex> order);

struct RecoveryReport {
  struct PerRoot {
    Vertex root = 0;
    std::vector<Vertex> candidate;  // empty when the ball was not independent
    bool independent = false;
    bool equals_planted = false;
    std::size_t ball_size = 0;
  };
  std::vector<PerRoot> per_root;
  std::vector<std::vector<Vertex>> distinct_candidates;  // first-root order
  std::size_t best_size = 0;
  double wall_ms = 0.0;

  bool planted_recovered() const;
  nlohmann::json to_json() const;
};

/// The list-rounding pass: for every root u, collect the ball's vertices,
/// keep {u} plus them when independent (otherwise skip the root), then
/// complete greedily in ascending vertex order. Every returned candidate is
/// independent and maximal.
RecoveryReport algorithm_one(const Hypergraph& h, const SdpSolution& solution, int tuple_size,
                             double threshold, double tol_round = 1e-3,
                             const std::vector<Vertex>* planted = nullptr);

/// r^{5/2} 2^{3r-2} e^{3r/2-2} / sqrt(3); the constant aggregating the
/// rounding losses.
double f_const(int r);

/// Planted-size threshold above which the rounding yields an independent
/// set of size (1-eps)k.
double k_threshold_large(double n, int r, double p, double eps);

/// Planted-size threshold above which the output list contains the planted
/// set itself. Logarithm taken natural.
double k_threshold_exact(double n, int r, double p);

}  // namespace hypis
