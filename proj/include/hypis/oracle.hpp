#pragma once

#include <chrono>
#include <vector>

#include "hypis/hypergraph.hpp"

namespace hypis {

struct OracleLimits {
  /// Exact-search cap on n; 0 means the default (25 for r = 2, 30 above).
  int max_n_exact = 0;
  std::chrono::milliseconds time_budget{10000};
};

/// Thrown when the time budget runs out; carries the best set found so far,
/// which is a valid lower bound but possibly not maximum.
class OracleTimeout : public std::runtime_error {
 public:
  OracleTimeout(std::vector<Vertex> best, bool lower_bound_only)
      : std::runtime_error("oracle time budget exceeded"),
        best_so_far(std::move(best)),
        lower_bound_only(lower_bound_only) {}
  std::vector<Vertex> best_so_far;
  bool lower_bound_only;
};

/// Maximum-cardinality independent set by branch and bound on vertex
/// inclusion, ties broken toward the lexicographically smallest set.
std::vector<Vertex> max_independent_set(const Hypergraph& h, const OracleLimits& limits = {});

/// All r-subsets of {0..n-1} meeting both the given set and its complement,
/// in lexicographic order. Count always equals boundary_size.
std::vector<Edge> enumerate_boundary(int n, int r, std::span<const Vertex> planted);

}  // namespace hypis
