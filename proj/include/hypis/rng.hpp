#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace hypis {

/// Counter-based splittable RNG. Every (seed, label) pair opens an
/// independent stream, so adding a new consumer never perturbs the values
/// another stream sees. Draw i of a stream is a pure function of
/// (seed, label, i); there is no hidden shared state.
class SplitStream {
 public:
  SplitStream(std::uint64_t seed, std::string_view label);

  std::uint64_t next();

  /// Uniform in [0, 1), 53 mantissa bits.
  double next_unit();

  /// Uniform in [0, bound), unbiased (128-bit multiply + rejection).
  std::uint64_t next_below(std::uint64_t bound);

  template <class T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace hypis
