#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "hypis/planted_model.hpp"
#include "hypis/sdp_problem.hpp"

namespace hypis {

struct SolveMeta {
  int iterations = 0;
  int ascent_iterations = 0;
  int polish_iterations = 0;
  double objective = 0.0;
  double max_violation = 0.0;
  bool converged = true;
  double wall_ms = 0.0;
  std::string termination;

  nlohmann::json to_json() const;
};

/// Gram matrix of the moment vectors, indexed by SubsetIndex(n, max_level).
struct SdpSolution {
  int n = 0;
  int r = 0;
  int max_level = 0;
  Eigen::MatrixXd gram;
  SolveMeta meta;

  /// <x_I, x_J>; subsets sorted ascending.
  double entry(std::span<const Vertex> I, std::span<const Vertex> J) const;
};

/// Gram of the intended feasible assignment: one shared unit vector for all
/// subsets of the planted set, orthonormal singletons on the complement,
/// zero elsewhere. Objective value C(k, r); feasible for the instance's
/// hypergraph.
SdpSolution planted_reference_solution(const PlantedInstance& instance);

/// Identity on the singleton block, zero elsewhere. Feasible for any
/// hypergraph; objective 0.
SdpSolution orthonormal_solution(int n, int r);

struct ViolationReport {
  struct Family {
    std::string name;
    double max_violation = 0.0;
    std::string worst;  // offending cell / row, human-readable
  };
  std::vector<Family> families;
  double overall = 0.0;
  double tol = 0.0;
  bool pass = false;

  const Family& family(const std::string& name) const;
  nlohmann::json to_json() const;
};

/// Checks every constraint family plus positive semidefiniteness (via the
/// minimum eigenvalue). pass iff the largest violation is at most tol.
ViolationReport verify_feasibility(const SdpProblem& problem, const SdpSolution& solution, double tol);

struct MassSplit {
  double planted = 0.0;   // r-subsets inside S
  double boundary = 0.0;  // r-subsets meeting both sides
  double rest = 0.0;      // r-subsets inside the complement

  double total() const { return planted + boundary + rest; }
};

/// Splits the objective mass over the three disjoint groups of r-subsets.
/// The parts always sum to the objective value read from the same Gram.
MassSplit mass_split(const SdpSolution& solution, std::span<const Vertex> planted);

/// Binary container with a JSON header; byte-deterministic.
void save_solution(const std::string& path, const SdpSolution& solution);
SdpSolution load_solution(const std::string& path);

}  // namespace hypis
