#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypis/errors.hpp"

namespace hypis {

using Vertex = int;
/// Sorted ascending, exactly r distinct vertices.
using Edge = std::vector<Vertex>;

/// r-uniform hypergraph on vertices 0..n-1. The edge list is kept sorted
/// and duplicate-free; construction validates every edge.
class Hypergraph {
 public:
  Hypergraph(int n, int r, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int uniformity() const noexcept { return r_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_edge(std::span<const Vertex> e) const;

  /// Ids (positions in edges()) of the edges containing v.
  const std::vector<std::int32_t>& incident_edges(Vertex v) const;

  /// True iff no edge lies entirely inside `vertex_set`.
  bool is_independent(std::span<const Vertex> vertex_set) const;

  /// Number of edges e with v in e and e \ {v} inside `pool`. Requires
  /// v outside `pool`.
  int restricted_degree(Vertex v, std::span<const Vertex> pool) const;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  int r_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::int32_t>> incidence_;
};

/// C(n,r) - C(k,r) - C(n-k,r): the r-subsets meeting both sides of a
/// (k, n-k) split.
std::uint64_t boundary_size(int n, int k, int r);

}  // namespace hypis
