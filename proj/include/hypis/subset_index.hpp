#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypis/errors.hpp"
#include "hypis/hypergraph.hpp"

namespace hypis {

/// Bijection between vertex subsets of size 1..max_size and the dense index
/// range [0, dimension). Levels are contiguous blocks ordered by subset
/// size; within a level subsets are ordered colexicographically, so that
/// rank({a_1 < ... < a_l}) = level_offset(l) + sum_i C(a_i, i).
class SubsetIndex {
 public:
  SubsetIndex(int n, int max_size);

  int vertex_count() const noexcept { return n_; }
  int max_size() const noexcept { return max_size_; }
  std::uint64_t dimension() const noexcept { return dim_; }

  /// Start of the level-l block, l in 1..max_size.
  std::uint64_t level_offset(int l) const;

  std::uint64_t rank(std::span<const Vertex> subset) const;

  std::vector<Vertex> unrank(std::uint64_t index) const;
  void unrank_into(std::uint64_t index, std::vector<Vertex>& out) const;

 private:
  int n_;
  int max_size_;
  std::vector<std::uint64_t> offsets_;  // offsets_[l] for l in 1..max_size
  std::uint64_t dim_;
};

/// Dimension of the moment index over subsets of size 1..r+1. Requires
/// n >= r+1 so that the top level exists.
std::uint64_t sdp_dimension(int n, int r);

}  // namespace hypis
