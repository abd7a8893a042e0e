#include "hypis/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "hypis/combinatorics.hpp"

namespace hypis {

namespace {

using Mask = std::uint64_t;

struct Search {
  int n = 0;
  std::vector<Mask> edge_masks;                 // per edge
  std::vector<std::vector<Mask>> incident;      // per vertex, masks of its edges
  std::chrono::steady_clock::time_point deadline;
  std::uint64_t tick = 0;
  Mask best_mask = 0;
  int best_count = 0;

  void check_budget() {
    if ((++tick & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline) {
      std::vector<Vertex> best;
      for (int v = 0; v < n; ++v)
        if (best_mask & (Mask{1} << v)) best.push_back(v);
      throw OracleTimeout(std::move(best), true);
    }
  }

  // Would adding v to `chosen` complete an edge?
  bool blocked(Mask chosen, int v) const {
    const Mask with = chosen | (Mask{1} << v);
    for (Mask e : incident[static_cast<std::size_t>(v)])
      if ((e & ~with) == 0) return true;
    return false;
  }

  // Phase 1: maximum size, branching over `order`, cardinality bound.
  void search_max(const std::vector<int>& order, std::size_t pos, Mask chosen, int count) {
    check_budget();
    if (count > best_count) {
      best_count = count;
      best_mask = chosen;
    }
    if (pos == order.size()) return;
    if (count + static_cast<int>(order.size() - pos) <= best_count) return;
    const int v = order[pos];
    if (!blocked(chosen, v)) search_max(order, pos + 1, chosen | (Mask{1} << v), count + 1);
    search_max(order, pos + 1, chosen, count);
  }

  // Phase 2: first set of size `target` in ascending include-first order,
  // which is the lexicographically smallest maximum set.
  bool search_lex(int pos, Mask chosen, int count, int target, Mask& found) {
    check_budget();
    if (count == target) {
      found = chosen;
      return true;
    }
    if (pos == n) return false;
    if (count + (n - pos) < target) return false;
    if (!blocked(chosen, pos) &&
        search_lex(pos + 1, chosen | (Mask{1} << pos), count + 1, target, found))
      return true;
    return search_lex(pos + 1, chosen, count, target, found);
  }
};

}  // namespace

std::vector<Vertex> max_independent_set(const Hypergraph& h, const OracleLimits& limits) {
  const int n = h.vertex_count();
  const int cap = limits.max_n_exact > 0 ? limits.max_n_exact : (h.uniformity() == 2 ? 25 : 30);
  if (n > cap)
    throw ParameterError("exact search capped at n=" + std::to_string(cap) + ", got " +
                         std::to_string(n));
  if (n > 63) throw ParameterError("oracle uses 64-bit masks");

  Search s;
  s.n = n;
  s.deadline = std::chrono::steady_clock::now() + limits.time_budget;
  s.incident.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : h.edges()) {
    Mask mask = 0;
    for (Vertex v : e) mask |= Mask{1} << v;
    s.edge_masks.push_back(mask);
    for (Vertex v : e) s.incident[static_cast<std::size_t>(v)].push_back(mask);
  }

  // Branch high-degree vertices first; deciding them early prunes fastest.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return h.incident_edges(a).size() > h.incident_edges(b).size();
  });
  s.search_max(order, 0, 0, 0);

  Mask lex = s.best_mask;
  s.search_lex(0, 0, 0, s.best_count, lex);

  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v)
    if (lex & (Mask{1} << v)) out.push_back(v);
  return out;
}

std::vector<Edge> enumerate_boundary(int n, int r, std::span<const Vertex> planted) {
  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  for (Vertex v : planted) {
    if (v < 0 || v >= n) throw ParameterError("planted vertex out of range");
    in_s[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Edge> out;
  for_each_subset(n, r, [&](std::span<const int> sub) {
    bool some_in = false, some_out = false;
    for (int v : sub) (in_s[static_cast<std::size_t>(v)] ? some_in : some_out) = true;
    if (some_in && some_out) out.emplace_back(sub.begin(), sub.end());
  });
  return out;
}

}  // namespace hypis
