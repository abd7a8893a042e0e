#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hypis/hypergraph.hpp"
#include "hypis/subset_index.hpp"

namespace hypis {

/// Sparse inequality over Gram cells: sum_t coeff_t * M(row_t, col_t) <= rhs.
/// Cells are stored upper-triangular (row <= col); each cell is read once.
struct SparseRow {
  struct Term {
    std::uint32_t row;
    std::uint32_t col;
    double coeff;
  };
  std::vector<Term> terms;
  double rhs = 0.0;

  double eval(const Eigen::MatrixXd& m) const {
    double acc = -rhs;
    for (const Term& t : terms) acc += t.coeff * m(t.row, t.col);
    return acc;  // violation when positive
  }
};

enum class PinKind : std::uint8_t { none = 0, zero = 1, one = 2 };

/// Compiled constraint system of the crude moment SDP over a hypergraph:
///
///   max  sum over r-subsets T of ||x_T||^2
///   s.t. ||x_v||^2 = 1, ||x_e||^2 = 0 for edges e (plus supersets under
///        strict pinning), <x_I, x_J> = ||x_{I u J}||^2 whenever
///        |I u J| <= max_level, <x_u, x_I> >= <x_u, x_J> for covering pairs
///        I c J, and the pairwise union bound over (r+1)-subsets.
///
/// The consistency constraint is realized structurally: every Gram cell
/// (I, J) with |I u J| <= max_level belongs to the class labeled I u J, and
/// the affine projection forces all cells of a class to one value. Cells
/// with a larger union stay free.
class SdpProblem {
 public:
  /// max_level defaults to r+1 and requires n >= r+1. Smaller hypergraphs
  /// can be hosted by truncating explicitly via max_level = r.
  static SdpProblem build(const Hypergraph& h, bool strict_pinning = true, int max_level = 0);

  int vertex_count() const noexcept { return n_; }
  int uniformity() const noexcept { return r_; }
  int max_level() const noexcept { return max_level_; }
  bool strict_pinning() const noexcept { return strict_pinning_; }
  const SubsetIndex& index() const noexcept { return index_; }
  std::uint32_t dim() const noexcept { return dim_; }

  /// Class id of a cell, or -1 when the union exceeds max_level.
  std::int32_t class_of(std::uint32_t i, std::uint32_t j) const {
    return class_of_[static_cast<std::size_t>(i) * dim_ + j];
  }
  PinKind pin(std::uint32_t class_id) const { return pins_[class_id]; }

  /// Upper-triangular cells of one class, encoded as i * dim + j with i <= j.
  std::span<const std::uint32_t> class_cells(std::uint32_t class_id) const {
    return {class_cells_.data() + class_offsets_[class_id],
            class_cells_.data() + class_offsets_[class_id + 1]};
  }

  const std::vector<SparseRow>& monotone_rows() const noexcept { return monotone_rows_; }
  const std::vector<SparseRow>& union_bound_rows() const noexcept { return union_bound_rows_; }

  /// Classes of the r-subsets that are not pinned to zero; the objective
  /// gradient lives on their diagonal cells.
  const std::vector<std::uint32_t>& objective_classes() const noexcept { return objective_classes_; }

  std::size_t pinned_one_count() const noexcept { return pinned_one_; }
  std::size_t pinned_zero_count() const noexcept { return pinned_zero_; }

  /// Sum of ||x_T||^2 over all r-subsets T, read off the Gram diagonal.
  double objective_value(const Eigen::MatrixXd& gram) const;

  /// Exact Euclidean projection onto the affine set {class ties hold, pins
  /// hold}, in the symmetric-matrix inner product.
  void project_affine(Eigen::MatrixXd& gram) const;

  /// Largest positive violation over the inequality rows.
  double max_row_violation(const Eigen::MatrixXd& gram) const;

 private:
  SdpProblem(const Hypergraph& h, bool strict_pinning, int max_level);

  int n_;
  int r_;
  int max_level_;
  bool strict_pinning_;
  SubsetIndex index_;
  std::uint32_t dim_;

  std::vector<std::int32_t> class_of_;       // dense dim x dim, -1 for free cells
  std::vector<std::uint32_t> class_offsets_; // CSR over classes
  std::vector<std::uint32_t> class_cells_;
  std::vector<PinKind> pins_;
  std::size_t pinned_one_ = 0;
  std::size_t pinned_zero_ = 0;

  std::vector<SparseRow> monotone_rows_;
  std::vector<SparseRow> union_bound_rows_;
  std::vector<std::uint32_t> objective_classes_;
};

}  // namespace hypis
