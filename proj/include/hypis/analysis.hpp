#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hypis/planted_model.hpp"
#include "hypis/sdp_solution.hpp"

namespace hypis {

/// Bipartite split of the random cross edges: one side holds the nonempty
/// subsets of the planted set of size < r, the other the same over the
/// complement; each random cross edge e contributes the pair
/// (e n S, e \ S). Only the pre-adversary cross group appears, so the view
/// is invariant to anything the adversary added.
struct BipartiteView {
  std::vector<std::vector<Vertex>> side_planted;  // U1, ordered by (size, lex)
  std::vector<std::vector<Vertex>> side_rest;     // U2
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (U1 idx, U2 idx)
  double p = 0.0;

  bool adjacent(std::uint32_t u1, std::uint32_t u2) const;

 private:
  friend BipartiteView build_bipartite(const PlantedInstance&);
  std::unordered_set<std::uint64_t> adjacency_;
};

BipartiteView build_bipartite(const PlantedInstance& instance);

/// lhs: boundary mass of the solution. rhs: the same mass rewritten through
/// the centered bipartite matrix B = p - A, divided by p. Equal for exactly
/// feasible solutions.
struct BoundaryMassIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};
BoundaryMassIdentity boundary_mass_identity(const SdpSolution& solution,
                                            const PlantedInstance& instance);

/// Rational-arithmetic variant for tiny instances: certifies gap == 0
/// exactly when all Gram entries and p are taken as exact rationals.
struct ExactBoundaryMassIdentity {
  std::string lhs;
  std::string rhs;
  bool gap_zero = false;
};
ExactBoundaryMassIdentity boundary_mass_identity_exact(const SdpSolution& solution,
                                                       const PlantedInstance& instance);

/// planted + boundary mass against C(k, r). Binding only for near-optimal
/// solutions; for anything else the report is informational.
struct TotalBoundReport {
  double mass_planted_plus_boundary = 0.0;
  double target = 0.0;  // C(k, r)
  double slack = 0.0;
  bool applicable = false;
  bool satisfied = false;
  bool pass = false;  // applicable implies satisfied
};
TotalBoundReport check_total_bound(const SdpSolution& solution, const PlantedInstance& instance,
                                   bool near_optimal, double tol_feas);

/// (f(r)/r^r) sqrt(k/p) n^{r-1}: the high-probability envelope on the
/// boundary mass.
double grothendieck_rhs(double n, double k, int r, double p);

/// k >= r 2^{2r+2} e^r / (3p), the regime where the envelope applies.
bool grothendieck_precondition(double k, int r, double p);

struct CountBoundsReport {
  std::uint64_t u1_plus_one = 0;
  std::uint64_t u2_plus_one = 0;
  std::uint64_t m_prime = 0;  // max bipartite edge count, sum C(k,i)C(n-k,r-i)
  double u1_bound = 0.0;
  double u2_bound = 0.0;
  double m_prime_upper = 0.0;
  double m_prime_lower = 0.0;
  bool u1_holds = false;
  bool u2_holds = false;
  bool upper_holds = false;
  bool lower_holds = false;
  bool all_hold = false;
};
CountBoundsReport count_bounds(int n, int k, int r);

/// Checks on one triple (w unit, |y|,|z| <= 1) that projections >= R onto w
/// cannot coexist with <y, z> = 0 once R > 1/sqrt(2). Returns true iff the
/// exclusion holds on this triple.
bool orthogonal_ball_check(const Eigen::VectorXd& w, const Eigen::VectorXd& y,
                           const Eigen::VectorXd& z, double r_threshold);

/// For each complement vertex v: does some tuple t (all tuples must be
/// (r-1)-subsets of the planted set) close an edge t u {v} in the
/// post-adversary hypergraph? Entries for planted vertices stay false.
std::vector<std::uint8_t> coverage_check(const PlantedInstance& instance,
                                         std::span<const std::vector<Vertex>> tuples);

/// Mean projection of the planted singletons vs the planted (r-1)-tuples
/// onto x_u. Recorded side by side; no order between them is asserted.
std::pair<double, double> projection_expectations(const SdpSolution& solution,
                                                  std::span<const Vertex> planted, Vertex u);

}  // namespace hypis
