#include "hypis/subset_index.hpp"

#include <algorithm>
#include <string>

#include "hypis/combinatorics.hpp"

namespace hypis {

SubsetIndex::SubsetIndex(int n, int max_size) : n_(n), max_size_(max_size) {
  if (max_size_ < 1) throw ParameterError("subset index needs max_size >= 1");
  if (n_ < max_size_) throw ParameterError("subset index needs n >= max_size");
  offsets_.assign(static_cast<std::size_t>(max_size_) + 1, 0);
  std::uint64_t acc = 0;
  for (int l = 1; l <= max_size_; ++l) {
    offsets_[static_cast<std::size_t>(l)] = acc;
    acc += binomial(n_, l);
  }
  dim_ = acc;
}

std::uint64_t SubsetIndex::level_offset(int l) const {
  if (l < 1 || l > max_size_) throw ParameterError("level out of range: " + std::to_string(l));
  return offsets_[static_cast<std::size_t>(l)];
}

std::uint64_t SubsetIndex::rank(std::span<const Vertex> subset) const {
  const int l = static_cast<int>(subset.size());
  if (l < 1 || l > max_size_)
    throw ParameterError("subset size " + std::to_string(l) + " outside 1.." + std::to_string(max_size_));
  std::uint64_t colex = 0;
  Vertex prev = -1;
  for (int i = 0; i < l; ++i) {
    const Vertex v = subset[static_cast<std::size_t>(i)];
    if (v <= prev || v >= n_) throw ParameterError("subset not strictly ascending in range");
    colex += binomial(v, i + 1);
    prev = v;
  }
  return offsets_[static_cast<std::size_t>(l)] + colex;
}

void SubsetIndex::unrank_into(std::uint64_t index, std::vector<Vertex>& out) const {
  if (index >= dim_) throw ParameterError("index " + std::to_string(index) + " out of range");
  int l = max_size_;
  while (l > 1 && offsets_[static_cast<std::size_t>(l)] > index) --l;
  std::uint64_t rem = index - offsets_[static_cast<std::size_t>(l)];
  out.assign(static_cast<std::size_t>(l), 0);
  int hi = n_ - 1;
  for (int i = l; i >= 1; --i) {
    // largest a with C(a, i) <= rem
    while (binomial(hi, i) > rem) --hi;
    out[static_cast<std::size_t>(i - 1)] = hi;
    rem -= binomial(hi, i);
    --hi;
  }
}

std::vector<Vertex> SubsetIndex::unrank(std::uint64_t index) const {
  std::vector<Vertex> out;
  unrank_into(index, out);
  return out;
}

std::uint64_t sdp_dimension(int n, int r) {
  if (n < r + 1) throw ParameterError("moment index needs n >= r+1");
  return SubsetIndex(n, r + 1).dimension();
}

}  // namespace hypis
