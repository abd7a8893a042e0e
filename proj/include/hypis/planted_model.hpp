#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypis/hypergraph.hpp"

namespace hypis {

/// What gets added inside the complement of the planted set (step 3 of the
/// generative model). The model itself leaves this arbitrary; these three
/// rules span benign to adversarial.
struct InsideStrategy {
  enum class Kind { none, uniform, planted_clique_confuser };
  Kind kind = Kind::none;
  double q = 0.0;  // uniform: per-subset inclusion probability
  int m = 0;       // confuser: size of the spared subset

  static InsideStrategy make_none() { return {}; }
  static InsideStrategy make_uniform(double q);
  static InsideStrategy make_confuser(int m);
  static InsideStrategy parse(const std::string& text);
  std::string format() const;
};

/// Monotone adversary rule (step 4): may only add edges outside the planted
/// set, never remove.
struct AdversaryStrategy {
  enum class Kind { none, random_monotone, degree_boost };
  Kind kind = Kind::none;
  double q = 0.0;  // random_monotone: per-eligible-absent-edge probability
  int t = 0;       // degree_boost: how many low-degree complement vertices to saturate

  static AdversaryStrategy make_none() { return {}; }
  static AdversaryStrategy make_random_monotone(double q);
  static AdversaryStrategy make_degree_boost(int t);
  static AdversaryStrategy parse(const std::string& text);
  std::string format() const;
};

struct ModelParams {
  int n = 0;
  int k = 0;
  int r = 2;
  double p = 0.0;
  InsideStrategy inside;
  AdversaryStrategy adversary;

  void validate() const;  // throws ParameterError
};

/// A generated instance keeps the three edge groups separate so that
/// downstream analysis can tell the random part from everything else.
/// The groups are disjoint and their union is hypergraph.edges().
struct PlantedInstance {
  Hypergraph hypergraph;
  std::vector<Vertex> planted_set;  // sorted, size k, independent
  std::vector<Edge> random_cross_edges;
  std::vector<Edge> inside_edges;
  std::vector<Edge> adversarial_edges;
  ModelParams params;
  std::uint64_t seed = 0;

  std::vector<Vertex> complement() const;
  bool in_planted(Vertex v) const;
};

/// Runs the four model steps. Deterministic for fixed (params, seed): each
/// step draws from its own labeled stream, so changing one strategy never
/// perturbs the others.
PlantedInstance generate_planted(const ModelParams& params, std::uint64_t seed);

/// Step 4 on its own. Returns an instance whose edge set is a superset of
/// the input; the random cross group is untouched and the planted set stays
/// independent.
PlantedInstance apply_adversary(const PlantedInstance& instance, const AdversaryStrategy& strategy,
                                std::uint64_t seed);

}  // namespace hypis
