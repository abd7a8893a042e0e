#include "hypis/combinatorics.hpp"

#include <array>

namespace hypis {

namespace {

constexpr int kMaxN = 64;

// Pascal triangle, saturating is unnecessary: C(64,32) < 2^63.
struct BinomTable {
  std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1> c{};
  BinomTable() {
    for (int n = 0; n <= kMaxN; ++n) {
      c[static_cast<std::size_t>(n)][0] = 1;
      for (int k = 1; k <= n; ++k) {
        const auto& prev = c[static_cast<std::size_t>(n - 1)];
        c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
            prev[static_cast<std::size_t>(k - 1)] + (k <= n - 1 ? prev[static_cast<std::size_t>(k)] : 0);
      }
    }
  }
};

const BinomTable& table() {
  static const BinomTable t;
  return t;
}

// Multiplicative fallback for n beyond the table; exact as long as the
// result fits in 64 bits, which holds for every use in this project.
std::uint64_t binomial_slow(int n, int k) {
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc *= static_cast<unsigned>(n - k + i);
    acc /= static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

std::uint64_t binomial(int n, int k) noexcept {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n <= kMaxN) return table().c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  return binomial_slow(n, k);
}

}  // namespace hypis
