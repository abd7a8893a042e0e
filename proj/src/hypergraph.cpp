#include "hypis/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hypis/combinatorics.hpp"

namespace hypis {

Hypergraph::Hypergraph(int n, int r, std::vector<Edge> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
  if (r_ < 2) throw ParameterError("uniformity must be at least 2, got " + std::to_string(r_));
  if (n_ < r_) throw ParameterError("need at least r vertices, got n=" + std::to_string(n_));
  for (auto& e : edges_) {
    if (static_cast<int>(e.size()) != r_)
      throw ParameterError("edge of cardinality " + std::to_string(e.size()) + " in a " +
                           std::to_string(r_) + "-uniform hypergraph");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw ParameterError("edge with repeated vertex");
    if (e.front() < 0 || e.back() >= n_) throw ParameterError("edge vertex out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw ParameterError("duplicate edge");
  incidence_.assign(static_cast<std::size_t>(n_), {});
  for (std::size_t id = 0; id < edges_.size(); ++id)
    for (Vertex v : edges_[id]) incidence_[static_cast<std::size_t>(v)].push_back(static_cast<std::int32_t>(id));
}

void Hypergraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw ParameterError("vertex " + std::to_string(v) + " out of range");
}

bool Hypergraph::has_edge(std::span<const Vertex> e) const {
  Edge key(e.begin(), e.end());
  std::sort(key.begin(), key.end());
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

const std::vector<std::int32_t>& Hypergraph::incident_edges(Vertex v) const {
  check_vertex(v);
  return incidence_[static_cast<std::size_t>(v)];
}

bool Hypergraph::is_independent(std::span<const Vertex> vertex_set) const {
  std::vector<char> member(static_cast<std::size_t>(n_), 0);
  for (Vertex v : vertex_set) {
    check_vertex(v);
    member[static_cast<std::size_t>(v)] = 1;
  }
  for (const Edge& e : edges_) {
    bool inside = true;
    for (Vertex v : e)
      if (!member[static_cast<std::size_t>(v)]) {
        inside = false;
        break;
      }
    if (inside) return false;
  }
  return true;
}

int Hypergraph::restricted_degree(Vertex v, std::span<const Vertex> pool) const {
  check_vertex(v);
  std::vector<char> member(static_cast<std::size_t>(n_), 0);
  for (Vertex u : pool) {
    check_vertex(u);
    member[static_cast<std::size_t>(u)] = 1;
  }
  if (member[static_cast<std::size_t>(v)])
    throw ParameterError("restricted_degree: vertex " + std::to_string(v) + " lies inside the pool");
  int count = 0;
  for (std::int32_t id : incident_edges(v)) {
    const Edge& e = edges_[static_cast<std::size_t>(id)];
    bool ok = true;
    for (Vertex u : e)
      if (u != v && !member[static_cast<std::size_t>(u)]) {
        ok = false;
        break;
      }
    if (ok) ++count;
  }
  return count;
}

std::uint64_t boundary_size(int n, int k, int r) {
  return binomial(n, r) - binomial(k, r) - binomial(n - k, r);
}

}  // namespace hypis
