#include "hypis/sdp_problem.hpp"

#include <algorithm>
#include <string>

#include "hypis/combinatorics.hpp"

namespace hypis {

SdpProblem SdpProblem::build(const Hypergraph& h, bool strict_pinning, int max_level) {
  if (max_level == 0) max_level = h.uniformity() + 1;
  return SdpProblem(h, strict_pinning, max_level);
}

SdpProblem::SdpProblem(const Hypergraph& h, bool strict_pinning, int max_level)
    : n_(h.vertex_count()),
      r_(h.uniformity()),
      max_level_(max_level),
      strict_pinning_(strict_pinning),
      index_((max_level < r_ || max_level > r_ + 1)
                 ? throw ParameterError("max_level must be r or r+1")
                 : (h.vertex_count() < max_level
                        ? throw ParameterError("hypergraph too small to host level " +
                                               std::to_string(max_level))
                        : SubsetIndex(h.vertex_count(), max_level))),
      dim_(static_cast<std::uint32_t>(index_.dimension())) {
  if (dim_ > 4096)
    throw ParameterError("problem dimension " + std::to_string(dim_) +
                         " too large for dense addressing");

  // Unrank cache.
  std::vector<std::vector<Vertex>> subsets(dim_);
  for (std::uint32_t i = 0; i < dim_; ++i) index_.unrank_into(i, subsets[i]);

  // Cell -> class map plus per-class cell counts.
  class_of_.assign(static_cast<std::size_t>(dim_) * dim_, -1);
  std::vector<std::uint32_t> counts(dim_ + 1, 0);
  std::vector<Vertex> merged;
  merged.reserve(static_cast<std::size_t>(max_level_) + 1);
  for (std::uint32_t i = 0; i < dim_; ++i) {
    const auto& a = subsets[i];
    for (std::uint32_t j = i; j < dim_; ++j) {
      const auto& b = subsets[j];
      merged.clear();
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
      if (static_cast<int>(merged.size()) > max_level_) continue;
      const auto cls = static_cast<std::int32_t>(index_.rank(merged));
      class_of_[static_cast<std::size_t>(i) * dim_ + j] = cls;
      class_of_[static_cast<std::size_t>(j) * dim_ + i] = cls;
      ++counts[static_cast<std::uint32_t>(cls)];
    }
  }

  class_offsets_.assign(dim_ + 1, 0);
  for (std::uint32_t c = 0; c < dim_; ++c) class_offsets_[c + 1] = class_offsets_[c] + counts[c];
  class_cells_.resize(class_offsets_[dim_]);
  std::vector<std::uint32_t> cursor(class_offsets_.begin(), class_offsets_.end() - 1);
  for (std::uint32_t i = 0; i < dim_; ++i)
    for (std::uint32_t j = i; j < dim_; ++j) {
      const std::int32_t cls = class_of_[static_cast<std::size_t>(i) * dim_ + j];
      if (cls >= 0) class_cells_[cursor[static_cast<std::uint32_t>(cls)]++] = i * dim_ + j;
    }

  // Pins: singletons to 1; every class whose label contains an edge to 0.
  pins_.assign(dim_, PinKind::none);
  for (int v = 0; v < n_; ++v) pins_[static_cast<std::uint32_t>(v)] = PinKind::one;
  pinned_one_ = static_cast<std::size_t>(n_);
  std::vector<Vertex> ext;
  for (const Edge& e : h.edges()) {
    pins_[static_cast<std::uint32_t>(index_.rank(e))] = PinKind::zero;
    if (strict_pinning_ && max_level_ == r_ + 1) {
      for (Vertex v = 0; v < n_; ++v) {
        if (std::binary_search(e.begin(), e.end(), v)) continue;
        ext.assign(e.begin(), e.end());
        ext.insert(std::lower_bound(ext.begin(), ext.end(), v), v);
        pins_[static_cast<std::uint32_t>(index_.rank(ext))] = PinKind::zero;
      }
    }
  }
  pinned_zero_ = static_cast<std::size_t>(
      std::count(pins_.begin(), pins_.end(), PinKind::zero));

  // Covering-pair monotone rows: <x_u, x_J> <= <x_u, x_I> for J = I u {x},
  // |J| <= max_level, all u. The full subset family follows by chaining.
  std::vector<Vertex> reduced;
  for (int l = 2; l <= max_level_; ++l) {
    for_each_subset(n_, l, [&](std::span<const int> bigger) {
      const auto j_idx = static_cast<std::uint32_t>(index_.rank(bigger));
      for (int drop = 0; drop < l; ++drop) {
        reduced.clear();
        for (int t = 0; t < l; ++t)
          if (t != drop) reduced.push_back(bigger[static_cast<std::size_t>(t)]);
        const auto i_idx = static_cast<std::uint32_t>(index_.rank(reduced));
        for (int u = 0; u < n_; ++u) {
          const auto u_idx = static_cast<std::uint32_t>(u);
          SparseRow row;
          row.terms.push_back({std::min(u_idx, j_idx), std::max(u_idx, j_idx), 1.0});
          row.terms.push_back({std::min(u_idx, i_idx), std::max(u_idx, i_idx), -1.0});
          row.rhs = 0.0;
          monotone_rows_.push_back(std::move(row));
        }
      }
    });
  }

  // Union bound over (r+1)-subsets, one row per distinguished element.
  if (max_level_ == r_ + 1) {
    std::vector<Vertex> pair(2);
    for_each_subset(n_, r_ + 1, [&](std::span<const int> w) {
      const auto w_idx = static_cast<std::uint32_t>(index_.rank(w));
      for (int ui = 0; ui <= r_; ++ui) {
        const Vertex u = w[static_cast<std::size_t>(ui)];
        SparseRow row;
        for (int vi = 0; vi <= r_; ++vi) {
          if (vi == ui) continue;
          const Vertex v = w[static_cast<std::size_t>(vi)];
          pair[0] = std::min(u, v);
          pair[1] = std::max(u, v);
          const auto pair_idx = static_cast<std::uint32_t>(index_.rank(pair));
          row.terms.push_back({pair_idx, pair_idx, 1.0});
        }
        row.terms.push_back({w_idx, w_idx, -1.0});
        row.rhs = static_cast<double>(r_ - 1);
        union_bound_rows_.push_back(std::move(row));
      }
    });
  }

  const std::uint64_t level_r_begin = index_.level_offset(r_);
  const std::uint64_t level_r_end = level_r_begin + binomial(n_, r_);
  for (std::uint64_t c = level_r_begin; c < level_r_end; ++c)
    if (pins_[static_cast<std::uint32_t>(c)] != PinKind::zero)
      objective_classes_.push_back(static_cast<std::uint32_t>(c));
}

double SdpProblem::objective_value(const Eigen::MatrixXd& gram) const {
  const std::uint64_t begin = index_.level_offset(r_);
  const std::uint64_t end = begin + binomial(n_, r_);
  double acc = 0.0;
  for (std::uint64_t c = begin; c < end; ++c)
    acc += gram(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c));
  return acc;
}

void SdpProblem::project_affine(Eigen::MatrixXd& gram) const {
  for (std::uint32_t c = 0; c < dim_; ++c) {
    const auto cells = class_cells(c);
    double value;
    if (pins_[c] == PinKind::one) {
      value = 1.0;
    } else if (pins_[c] == PinKind::zero) {
      value = 0.0;
    } else {
      // Weighted mean: off-diagonal cells appear twice in the symmetric
      // inner product.
      double num = 0.0, den = 0.0;
      for (std::uint32_t cell : cells) {
        const std::uint32_t i = cell / dim_, j = cell % dim_;
        const double w = (i == j) ? 1.0 : 2.0;
        num += w * gram(i, j);
        den += w;
      }
      value = num / den;
    }
    for (std::uint32_t cell : cells) {
      const std::uint32_t i = cell / dim_, j = cell % dim_;
      gram(i, j) = value;
      gram(j, i) = value;
    }
  }
}

double SdpProblem::max_row_violation(const Eigen::MatrixXd& gram) const {
  double worst = 0.0;
  for (const SparseRow& row : monotone_rows_) worst = std::max(worst, row.eval(gram));
  for (const SparseRow& row : union_bound_rows_) worst = std::max(worst, row.eval(gram));
  return worst;
}

}  // namespace hypis
