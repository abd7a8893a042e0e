#include "hypis/sdpa_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "hypis/combinatorics.hpp"

namespace hypis {

namespace {

void write_double(std::ostream& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.write(buf, ptr - buf);
}

// One entry line: <matno> <blk> <i> <j> <value>, 1-based indices, upper
// triangle only. Off-diagonal cells carry coefficient/2 so that tr(F X)
// reads the cell exactly once.
void entry(std::ostream& out, int mat, int blk, std::uint32_t i, std::uint32_t j, double coeff) {
  const double value = (i == j) ? coeff : 0.5 * coeff;
  out << mat << ' ' << blk << ' ' << (std::min(i, j) + 1) << ' ' << (std::max(i, j) + 1) << ' ';
  write_double(out, value);
  out << '\n';
}

}  // namespace

void export_sdpa(const SdpProblem& problem, std::ostream& out) {
  const std::uint32_t dim = problem.dim();
  const auto& mono = problem.monotone_rows();
  const auto& ub = problem.union_bound_rows();
  const int slack_count = static_cast<int>(mono.size() + ub.size());

  // Count constraints: level-1 pins, pinned-zero representatives, class-tie
  // equalities, then one row per inequality.
  int tie_count = 0;
  int pin_zero_count = 0;
  for (std::uint32_t c = 0; c < dim; ++c) {
    tie_count += static_cast<int>(problem.class_cells(c).size()) - 1;
    if (problem.pin(c) == PinKind::zero) ++pin_zero_count;
  }
  const int m = problem.vertex_count() + pin_zero_count + tie_count + slack_count;

  out << "\"crude moment SDP over an r-uniform hypergraph, n=" << problem.vertex_count()
      << " r=" << problem.uniformity() << "\n";
  out << m << "\n";
  out << (slack_count > 0 ? 2 : 1) << "\n";
  out << dim;
  if (slack_count > 0) out << " -" << slack_count;
  out << "\n";

  // Right-hand sides.
  bool first = true;
  const auto push_rhs = [&](double v) {
    if (!first) out << ' ';
    write_double(out, v);
    first = false;
  };
  for (int v = 0; v < problem.vertex_count(); ++v) push_rhs(1.0);
  for (int i = 0; i < pin_zero_count + tie_count; ++i) push_rhs(0.0);
  for (const SparseRow& row : mono) push_rhs(row.rhs);
  for (const SparseRow& row : ub) push_rhs(row.rhs);
  out << "\n";

  // Objective: the level-r diagonal block.
  const std::uint64_t level_r = problem.index().level_offset(problem.uniformity());
  const std::uint64_t level_r_end = level_r + binomial(problem.vertex_count(), problem.uniformity());
  for (std::uint64_t c = level_r; c < level_r_end; ++c)
    entry(out, 0, 1, static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c), 1.0);

  int mat = 0;
  for (int v = 0; v < problem.vertex_count(); ++v) {
    ++mat;
    entry(out, mat, 1, static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v), 1.0);
  }
  for (std::uint32_t c = 0; c < dim; ++c) {
    if (problem.pin(c) != PinKind::zero) continue;
    ++mat;
    entry(out, mat, 1, c, c, 1.0);
  }
  for (std::uint32_t c = 0; c < dim; ++c) {
    for (std::uint32_t cell : problem.class_cells(c)) {
      const std::uint32_t i = cell / dim, j = cell % dim;
      if (i == c && j == c) continue;  // the representative diagonal cell
      ++mat;
      entry(out, mat, 1, i, j, 1.0);
      entry(out, mat, 1, c, c, -1.0);
    }
  }
  int slack = 0;
  const auto emit_inequality = [&](const SparseRow& row) {
    ++mat;
    ++slack;
    for (const auto& t : row.terms) entry(out, mat, 1, t.row, t.col, t.coeff);
    entry(out, mat, 2, static_cast<std::uint32_t>(slack - 1), static_cast<std::uint32_t>(slack - 1),
          1.0);
  };
  for (const SparseRow& row : mono) emit_inequality(row);
  for (const SparseRow& row : ub) emit_inequality(row);
}

SdpaSummary read_sdpa_summary(std::istream& in) {
  SdpaSummary summary;
  std::string line;
  // comments
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '"' || line[0] == '*') continue;
    break;
  }
  summary.constraint_count = std::stoi(line);
  int nblocks = 0;
  in >> nblocks;
  for (int b = 0; b < nblocks; ++b) {
    int size = 0;
    in >> size;
    summary.block_sizes.push_back(size);
  }
  // c vector
  for (int i = 0; i < summary.constraint_count; ++i) {
    double v;
    in >> v;
  }
  int mat, blk, i, j;
  double v;
  while (in >> mat >> blk >> i >> j >> v) ++summary.entry_count;
  return summary;
}

}  // namespace hypis
