#pragma once

#include <iosfwd>
#include <vector>

#include "hypis/sdp_problem.hpp"

namespace hypis {

/// Renders the problem in sparse SDPA (".dat-s") form:
///   max tr(F_0 X)  s.t.  tr(F_i X) = c_i,  X >= 0
/// Block 1 is the Gram matrix, block 2 a diagonal slack block turning the
/// inequality rows into equalities. Union classes are expanded into
/// explicit cell-equality constraints against the class diagonal.
/// Byte-deterministic for a fixed problem.
void export_sdpa(const SdpProblem& problem, std::ostream& out);

struct SdpaSummary {
  int constraint_count = 0;
  std::vector<int> block_sizes;  // negative entries mean diagonal blocks
  std::size_t entry_count = 0;   // matrix entry lines, objective included
};

/// Parses enough of an SDPA sparse stream to round-trip the counts.
SdpaSummary read_sdpa_summary(std::istream& in);

}  // namespace hypis
