#include "hypis/sdp_solution.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hypis/combinatorics.hpp"

namespace hypis {

namespace {

std::string subset_to_string(std::span<const Vertex> s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

}  // namespace

nlohmann::json SolveMeta::to_json() const {
  return nlohmann::json{{"iterations", iterations},
                        {"ascent_iterations", ascent_iterations},
                        {"polish_iterations", polish_iterations},
                        {"objective", objective},
                        {"max_violation", max_violation},
                        {"converged", converged},
                        {"wall_ms", wall_ms},
                        {"termination", termination}};
}

double SdpSolution::entry(std::span<const Vertex> I, std::span<const Vertex> J) const {
  const SubsetIndex index(n, max_level);
  const auto i = static_cast<Eigen::Index>(index.rank(I));
  const auto j = static_cast<Eigen::Index>(index.rank(J));
  return gram(i, j);
}

SdpSolution planted_reference_solution(const PlantedInstance& instance) {
  const int n = instance.params.n;
  const int r = instance.params.r;
  if (n < r + 1) throw ParameterError("instance too small to host level r+1");
  if (!instance.hypergraph.is_independent(instance.planted_set))
    throw ParameterError("planted set is not independent");

  const SubsetIndex index(n, r + 1);
  const auto dim = static_cast<Eigen::Index>(index.dimension());
  SdpSolution sol;
  sol.n = n;
  sol.r = r;
  sol.max_level = r + 1;
  sol.gram = Eigen::MatrixXd::Zero(dim, dim);

  // inside[i]: subset i lies fully inside the planted set
  std::vector<char> inside(static_cast<std::size_t>(dim), 1);
  std::vector<Vertex> subset;
  for (Eigen::Index i = 0; i < dim; ++i) {
    index.unrank_into(static_cast<std::uint64_t>(i), subset);
    for (Vertex v : subset)
      if (!instance.in_planted(v)) {
        inside[static_cast<std::size_t>(i)] = 0;
        break;
      }
  }
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (inside[static_cast<std::size_t>(i)]) {
      for (Eigen::Index j = i; j < dim; ++j)
        if (inside[static_cast<std::size_t>(j)]) {
          sol.gram(i, j) = 1.0;
          sol.gram(j, i) = 1.0;
        }
    } else if (i < n) {
      sol.gram(i, i) = 1.0;  // orthonormal singleton on the complement
    }
  }
  sol.meta.objective = static_cast<double>(binomial(instance.params.k, r));
  sol.meta.termination = "constructed";
  return sol;
}

SdpSolution orthonormal_solution(int n, int r) {
  if (n < r + 1) throw ParameterError("orthonormal solution needs n >= r+1");
  const SubsetIndex index(n, r + 1);
  const auto dim = static_cast<Eigen::Index>(index.dimension());
  SdpSolution sol;
  sol.n = n;
  sol.r = r;
  sol.max_level = r + 1;
  sol.gram = Eigen::MatrixXd::Zero(dim, dim);
  for (int v = 0; v < n; ++v) sol.gram(v, v) = 1.0;
  sol.meta.objective = 0.0;
  sol.meta.termination = "constructed";
  return sol;
}

const ViolationReport::Family& ViolationReport::family(const std::string& name) const {
  for (const Family& f : families)
    if (f.name == name) return f;
  throw ParameterError("no violation family named " + name);
}

nlohmann::json ViolationReport::to_json() const {
  nlohmann::json fams = nlohmann::json::array();
  for (const Family& f : families)
    fams.push_back({{"name", f.name}, {"max_violation", f.max_violation}, {"worst", f.worst}});
  return nlohmann::json{{"families", fams}, {"overall", overall}, {"tol", tol}, {"pass", pass}};
}

ViolationReport verify_feasibility(const SdpProblem& problem, const SdpSolution& solution, double tol) {
  if (solution.gram.rows() != static_cast<Eigen::Index>(problem.dim()) ||
      solution.gram.cols() != static_cast<Eigen::Index>(problem.dim()))
    throw ParameterError("solution dimension does not match problem");

  const Eigen::MatrixXd& m = solution.gram;
  const SubsetIndex& index = problem.index();
  ViolationReport report;
  report.tol = tol;

  ViolationReport::Family level1{"level1_diagonal", 0.0, ""};
  for (int v = 0; v < problem.vertex_count(); ++v) {
    const double gap = std::abs(m(v, v) - 1.0);
    if (gap > level1.max_violation) {
      level1.max_violation = gap;
      level1.worst = "vertex " + std::to_string(v);
    }
  }

  ViolationReport::Family pinned{"pinned_zero", 0.0, ""};
  ViolationReport::Family ties{"union_class_tie", 0.0, ""};
  for (std::uint32_t c = 0; c < problem.dim(); ++c) {
    const auto cells = problem.class_cells(c);
    if (problem.pin(c) == PinKind::zero) {
      for (std::uint32_t cell : cells) {
        const double v = std::abs(m(cell / problem.dim(), cell % problem.dim()));
        if (v > pinned.max_violation) {
          pinned.max_violation = v;
          pinned.worst = "class " + subset_to_string(index.unrank(c));
        }
      }
    }
    double lo = m(cells.front() / problem.dim(), cells.front() % problem.dim());
    double hi = lo;
    for (std::uint32_t cell : cells) {
      const double v = m(cell / problem.dim(), cell % problem.dim());
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo > ties.max_violation) {
      ties.max_violation = hi - lo;
      ties.worst = "class " + subset_to_string(index.unrank(c));
    }
  }

  const auto scan_rows = [&](const std::vector<SparseRow>& rows, const char* name) {
    ViolationReport::Family fam{name, 0.0, ""};
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double g = rows[i].eval(m);
      if (g > fam.max_violation) {
        fam.max_violation = g;
        fam.worst = "row " + std::to_string(i);
      }
    }
    return fam;
  };
  ViolationReport::Family mono = scan_rows(problem.monotone_rows(), "monotone_rows");
  ViolationReport::Family ub = scan_rows(problem.union_bound_rows(), "union_bound_rows");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.compute(m, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues()(0);
  ViolationReport::Family psd{"psd", std::max(0.0, -min_eig),
                              "min eigenvalue " + std::to_string(min_eig)};

  report.families = {level1, pinned, ties, mono, ub, psd};
  for (const auto& f : report.families) report.overall = std::max(report.overall, f.max_violation);
  report.pass = report.overall <= tol;
  return report;
}

MassSplit mass_split(const SdpSolution& solution, std::span<const Vertex> planted) {
  const SubsetIndex index(solution.n, solution.max_level);
  std::vector<char> in_s(static_cast<std::size_t>(solution.n), 0);
  for (Vertex v : planted) in_s[static_cast<std::size_t>(v)] = 1;
  MassSplit split;
  std::vector<Vertex> subset;
  const std::uint64_t begin = index.level_offset(solution.r);
  const std::uint64_t end = begin + binomial(solution.n, solution.r);
  for (std::uint64_t c = begin; c < end; ++c) {
    index.unrank_into(c, subset);
    int inside = 0;
    for (Vertex v : subset) inside += in_s[static_cast<std::size_t>(v)];
    const double mass = solution.gram(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c));
    if (inside == solution.r)
      split.planted += mass;
    else if (inside == 0)
      split.rest += mass;
    else
      split.boundary += mass;
  }
  return split;
}

namespace {
constexpr char kSolutionMagic[4] = {'H', 'S', 'O', 'L'};
}

void save_solution(const std::string& path, const SdpSolution& solution) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write solution file: " + path);
  nlohmann::json header{{"schema_version", 1},
                        {"n", solution.n},
                        {"r", solution.r},
                        {"max_level", solution.max_level},
                        {"dim", solution.gram.rows()},
                        {"layout", "upper_packed_f64_le"},
                        {"meta", solution.meta.to_json()}};
  const std::string header_bytes = header.dump();
  const auto header_len = static_cast<std::uint32_t>(header_bytes.size());
  out.write(kSolutionMagic, 4);
  out.write(reinterpret_cast<const char*>(&header_len), 4);
  out.write(header_bytes.data(), static_cast<std::streamsize>(header_bytes.size()));
  const auto dim = solution.gram.rows();
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = i; j < dim; ++j) {
      const double v = solution.gram(i, j);
      out.write(reinterpret_cast<const char*>(&v), sizeof(double));
    }
  if (!out) throw IoError("write failed: " + path);
}

SdpSolution load_solution(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open solution file: " + path);
  char magic[4];
  std::uint32_t header_len = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&header_len), 4);
  if (!in || std::string(magic, 4) != std::string(kSolutionMagic, 4))
    throw IoError("not a solution container: " + path);
  std::string header_bytes(header_len, '\0');
  in.read(header_bytes.data(), header_len);
  const nlohmann::json header = nlohmann::json::parse(header_bytes);

  SdpSolution sol;
  sol.n = header.at("n").get<int>();
  sol.r = header.at("r").get<int>();
  sol.max_level = header.at("max_level").get<int>();
  const auto dim = header.at("dim").get<Eigen::Index>();
  sol.gram = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = i; j < dim; ++j) {
      double v = 0;
      in.read(reinterpret_cast<char*>(&v), sizeof(double));
      sol.gram(i, j) = v;
      sol.gram(j, i) = v;
    }
  if (!in) throw IoError("truncated solution container: " + path);
  const auto& meta = header.at("meta");
  sol.meta.iterations = meta.at("iterations").get<int>();
  sol.meta.ascent_iterations = meta.at("ascent_iterations").get<int>();
  sol.meta.polish_iterations = meta.at("polish_iterations").get<int>();
  sol.meta.objective = meta.at("objective").get<double>();
  sol.meta.max_violation = meta.at("max_violation").get<double>();
  sol.meta.converged = meta.at("converged").get<bool>();
  sol.meta.wall_ms = meta.at("wall_ms").get<double>();
  sol.meta.termination = meta.at("termination").get<std::string>();
  return sol;
}

}  // namespace hypis
