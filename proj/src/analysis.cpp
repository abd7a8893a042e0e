#include "hypis/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypis/combinatorics.hpp"
#include "hypis/oracle.hpp"
#include "hypis/rounding.hpp"
#include "hypis/subset_index.hpp"

namespace hypis {

using rational = boost::multiprecision::cpp_rational;

bool BipartiteView::adjacent(std::uint32_t u1, std::uint32_t u2) const {
  return adjacency_.count((static_cast<std::uint64_t>(u1) << 32) | u2) > 0;
}

BipartiteView build_bipartite(const PlantedInstance& instance) {
  const int r = instance.params.r;
  BipartiteView view;
  view.p = instance.params.p;

  const std::vector<Vertex> comp = instance.complement();
  std::map<std::vector<Vertex>, std::uint32_t> planted_ids, rest_ids;
  for (int size = 1; size <= r - 1; ++size) {
    for_each_subset_of(std::span<const int>(instance.planted_set), size,
                       [&](std::span<const int> sub) {
                         planted_ids.emplace(std::vector<Vertex>(sub.begin(), sub.end()),
                                             static_cast<std::uint32_t>(view.side_planted.size()));
                         view.side_planted.emplace_back(sub.begin(), sub.end());
                       });
    for_each_subset_of(std::span<const int>(comp), size, [&](std::span<const int> sub) {
      rest_ids.emplace(std::vector<Vertex>(sub.begin(), sub.end()),
                       static_cast<std::uint32_t>(view.side_rest.size()));
      view.side_rest.emplace_back(sub.begin(), sub.end());
    });
  }

  for (const Edge& e : instance.random_cross_edges) {
    std::vector<Vertex> in_s, out_s;
    for (Vertex v : e) (instance.in_planted(v) ? in_s : out_s).push_back(v);
    if (in_s.empty() || out_s.empty())
      throw InvariantError("random cross edge does not meet both sides");
    const std::uint32_t a = planted_ids.at(in_s);
    const std::uint32_t b = rest_ids.at(out_s);
    view.edges.emplace_back(a, b);
    view.adjacency_.insert((static_cast<std::uint64_t>(a) << 32) | b);
  }
  return view;
}

namespace {

// Iterates the eligible bipartite pairs (I inside S of size i, J outside of
// size r-i) and hands each to fn together with its adjacency bit. B is
// never materialized: it only differs from -A on these pairs.
template <class Fn>
void for_each_eligible_pair(const BipartiteView& view, const PlantedInstance& instance, Fn&& fn) {
  const int r = instance.params.r;
  std::map<std::vector<Vertex>, std::uint32_t> planted_ids, rest_ids;
  for (std::uint32_t i = 0; i < view.side_planted.size(); ++i)
    planted_ids.emplace(view.side_planted[i], i);
  for (std::uint32_t i = 0; i < view.side_rest.size(); ++i) rest_ids.emplace(view.side_rest[i], i);
  for (const auto& [sub_s, id_s] : planted_ids) {
    const int other = r - static_cast<int>(sub_s.size());
    for (const auto& [sub_c, id_c] : rest_ids) {
      if (static_cast<int>(sub_c.size()) != other) continue;
      fn(sub_s, sub_c, view.adjacent(id_s, id_c));
    }
  }
}

}  // namespace

BoundaryMassIdentity boundary_mass_identity(const SdpSolution& solution,
                                            const PlantedInstance& instance) {
  if (instance.params.p <= 0.0)
    throw ParameterError("boundary mass identity undefined at p = 0");
  const SubsetIndex index(solution.n, solution.max_level);
  const BipartiteView view = build_bipartite(instance);

  BoundaryMassIdentity out;
  for (const Edge& t :
       enumerate_boundary(instance.params.n, instance.params.r, instance.planted_set)) {
    const auto c = static_cast<Eigen::Index>(index.rank(t));
    out.lhs += solution.gram(c, c);
  }

  double acc = 0.0;
  std::vector<Vertex> merged;
  for_each_eligible_pair(view, instance,
                         [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b, bool adj) {
                           const auto i = static_cast<Eigen::Index>(index.rank(a));
                           const auto j = static_cast<Eigen::Index>(index.rank(b));
                           acc += (view.p - (adj ? 1.0 : 0.0)) * solution.gram(i, j);
                         });
  out.rhs = acc / view.p;
  out.gap = std::abs(out.lhs - out.rhs);
  return out;
}

ExactBoundaryMassIdentity boundary_mass_identity_exact(const SdpSolution& solution,
                                                       const PlantedInstance& instance) {
  if (instance.params.p <= 0.0)
    throw ParameterError("boundary mass identity undefined at p = 0");
  const SubsetIndex index(solution.n, solution.max_level);
  const BipartiteView view = build_bipartite(instance);
  const rational p(instance.params.p);  // doubles are exact rationals

  rational lhs = 0;
  for (const Edge& t :
       enumerate_boundary(instance.params.n, instance.params.r, instance.planted_set)) {
    const auto c = static_cast<Eigen::Index>(index.rank(t));
    lhs += rational(solution.gram(c, c));
  }
  rational acc = 0;
  for_each_eligible_pair(view, instance,
                         [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b, bool adj) {
                           const auto i = static_cast<Eigen::Index>(index.rank(a));
                           const auto j = static_cast<Eigen::Index>(index.rank(b));
                           acc += (p - rational(adj ? 1 : 0)) * rational(solution.gram(i, j));
                         });
  const rational rhs = acc / p;

  ExactBoundaryMassIdentity out;
  std::ostringstream ls, rs;
  ls << lhs;
  rs << rhs;
  out.lhs = ls.str();
  out.rhs = rs.str();
  out.gap_zero = (lhs == rhs);
  return out;
}

TotalBoundReport check_total_bound(const SdpSolution& solution, const PlantedInstance& instance,
                                   bool near_optimal, double tol_feas) {
  const MassSplit split = mass_split(solution, instance.planted_set);
  TotalBoundReport report;
  report.mass_planted_plus_boundary = split.planted + split.boundary;
  report.target = static_cast<double>(binomial(instance.params.k, instance.params.r));
  report.slack = 10.0 * tol_feas * report.target;
  report.applicable = near_optimal;
  report.satisfied = report.mass_planted_plus_boundary >= report.target - report.slack;
  report.pass = !report.applicable || report.satisfied;
  return report;
}

double grothendieck_rhs(double n, double k, int r, double p) {
  return f_const(r) / std::pow(r, r) * std::sqrt(k / p) * std::pow(n, r - 1);
}

bool grothendieck_precondition(double k, int r, double p) {
  return k >= r * std::pow(2.0, 2 * r + 2) * std::exp(r) / (3.0 * p);
}

CountBoundsReport count_bounds(int n, int k, int r) {
  if (r < 2) throw ParameterError("count_bounds needs r >= 2");
  if (k < 1 || 2 * k > n) throw ParameterError("count_bounds needs 1 <= k <= n/2");
  CountBoundsReport report;
  for (int i = 0; i <= r - 1; ++i) {
    report.u1_plus_one += binomial(k, i);
    report.u2_plus_one += binomial(n - k, i);
  }
  for (int i = 1; i <= r - 1; ++i) report.m_prime += binomial(k, i) * binomial(n - k, r - i);

  const double e = std::exp(1.0);
  report.u1_bound = r * std::pow(2.0 * e * k / r, r - 1);
  report.u2_bound = r * std::pow(2.0 * e * n / r, r - 1);
  report.m_prime_upper = std::pow(4.0 * e, r - 2) * k * std::pow(n, r - 1) / std::pow(r, r - 2);
  report.m_prime_lower = k * std::pow(n / (2.0 * r), r - 1);

  report.u1_holds = static_cast<double>(report.u1_plus_one) <= report.u1_bound;
  report.u2_holds = static_cast<double>(report.u2_plus_one) <= report.u2_bound;
  report.upper_holds = static_cast<double>(report.m_prime) <= report.m_prime_upper;
  report.lower_holds = static_cast<double>(report.m_prime) >= report.m_prime_lower;
  report.all_hold = report.u1_holds && report.u2_holds && report.upper_holds && report.lower_holds;
  return report;
}

bool orthogonal_ball_check(const Eigen::VectorXd& w, const Eigen::VectorXd& y,
                           const Eigen::VectorXd& z, double r_threshold) {
  if (r_threshold <= 1.0 / std::sqrt(2.0))
    throw ParameterError("orthogonal_ball_check needs R > 1/sqrt(2)");
  if (std::abs(w.norm() - 1.0) > 1e-10) throw ParameterError("w must be a unit vector");
  if (y.norm() > 1.0 + 1e-10 || z.norm() > 1.0 + 1e-10)
    throw ParameterError("y and z must lie in the unit ball");
  const bool y_in = w.dot(y) >= r_threshold;
  const bool orthogonal = std::abs(y.dot(z)) <= 1e-10;
  const bool z_in = w.dot(z) >= r_threshold;
  return !(y_in && orthogonal && z_in);
}

std::vector<std::uint8_t> coverage_check(const PlantedInstance& instance,
                                         std::span<const std::vector<Vertex>> tuples) {
  const int n = instance.params.n;
  const int r = instance.params.r;
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) != r - 1)
      throw ParameterError("coverage tuples must have size r-1");
    for (Vertex v : t)
      if (!instance.in_planted(v)) throw ParameterError("coverage tuple leaves the planted set");
  }
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> probe;
  for (Vertex v = 0; v < n; ++v) {
    if (instance.in_planted(v)) continue;
    for (const auto& t : tuples) {
      probe.assign(t.begin(), t.end());
      probe.insert(std::lower_bound(probe.begin(), probe.end(), v), v);
      if (instance.hypergraph.has_edge(probe)) {
        covered[static_cast<std::size_t>(v)] = 1;
        break;
      }
    }
  }
  return covered;
}

std::pair<double, double> projection_expectations(const SdpSolution& solution,
                                                  std::span<const Vertex> planted, Vertex u) {
  const SubsetIndex index(solution.n, solution.max_level);
  std::vector<Vertex> others;
  for (Vertex v : planted)
    if (v != u) others.push_back(v);
  if (others.size() == planted.size()) throw ParameterError("u must lie in the planted set");

  double singles = 0.0;
  for (Vertex v : others) singles += solution.gram(u, v);
  singles /= others.empty() ? 1.0 : static_cast<double>(others.size());

  double tuples_mean = 0.0;
  std::size_t count = 0;
  for_each_subset_of(std::span<const int>(others), solution.r - 1, [&](std::span<const int> t) {
    tuples_mean += solution.gram(u, static_cast<Eigen::Index>(index.rank(t)));
    ++count;
  });
  if (count > 0) tuples_mean /= static_cast<double>(count);
  return {singles, tuples_mean};
}

}  // namespace hypis
