#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hypis {

/// Exact binomial coefficient, 0 outside the triangle. Backed by a cached
/// Pascal table; everything this project touches stays below 2^63.
std::uint64_t binomial(int n, int k) noexcept;

namespace detail {

template <class Fn>
void visit_subsets(std::span<const int> pool, int size, Fn&& fn) {
  if (size == 0 || size > static_cast<int>(pool.size())) return;
  std::vector<int> cur(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) cur[static_cast<std::size_t>(i)] = i;
  const int n = static_cast<int>(pool.size());
  std::vector<int> mapped(static_cast<std::size_t>(size));
  for (;;) {
    for (int i = 0; i < size; ++i)
      mapped[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(cur[static_cast<std::size_t>(i)])];
    fn(std::span<const int>(mapped));
    // advance to the next combination in lexicographic order
    int i = size - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - size + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace detail

/// Calls fn once per sorted `size`-subset of `pool` (which must itself be
/// sorted), in lexicographic order over positions.
template <class Fn>
void for_each_subset_of(std::span<const int> pool, int size, Fn&& fn) {
  detail::visit_subsets(pool, size, std::forward<Fn>(fn));
}

/// Calls fn once per sorted `size`-subset of {0,...,n-1} in lexicographic order.
template <class Fn>
void for_each_subset(int n, int size, Fn&& fn) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  detail::visit_subsets(std::span<const int>(pool), size, std::forward<Fn>(fn));
}

}  // namespace hypis
