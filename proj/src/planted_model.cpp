#include "hypis/planted_model.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "hypis/combinatorics.hpp"
#include "hypis/rng.hpp"

namespace hypis {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

// "name", "name(arg)"
std::pair<std::string, std::string> split_call(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos) return {text, ""};
  if (text.back() != ')') throw ParameterError("malformed strategy: " + text);
  return {text.substr(0, open), text.substr(open + 1, text.size() - open - 2)};
}

double parse_double_arg(const std::string& arg, const std::string& what) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v);
  if (ec != std::errc() || ptr != arg.data() + arg.size())
    throw ParameterError("bad numeric argument for " + what + ": " + arg);
  return v;
}

}  // namespace

InsideStrategy InsideStrategy::make_uniform(double q) {
  if (q < 0.0 || q > 1.0) throw ParameterError("uniform inside strategy needs q in [0,1]");
  InsideStrategy s;
  s.kind = Kind::uniform;
  s.q = q;
  return s;
}

InsideStrategy InsideStrategy::make_confuser(int m) {
  if (m < 0) throw ParameterError("confuser strategy needs m >= 0");
  InsideStrategy s;
  s.kind = Kind::planted_clique_confuser;
  s.m = m;
  return s;
}

InsideStrategy InsideStrategy::parse(const std::string& text) {
  auto [name, arg] = split_call(text);
  if (name == "none") return make_none();
  if (name == "uniform") return make_uniform(parse_double_arg(arg, "uniform"));
  if (name == "planted_clique_confuser" || name == "confuser")
    return make_confuser(static_cast<int>(parse_double_arg(arg, "confuser")));
  throw ParameterError("unknown inside strategy: " + text);
}

std::string InsideStrategy::format() const {
  switch (kind) {
    case Kind::none: return "none";
    case Kind::uniform: return "uniform(" + format_double(q) + ")";
    case Kind::planted_clique_confuser: return "planted_clique_confuser(" + std::to_string(m) + ")";
  }
  return "none";
}

AdversaryStrategy AdversaryStrategy::make_random_monotone(double q) {
  if (q < 0.0 || q > 1.0) throw ParameterError("random_monotone needs q in [0,1]");
  AdversaryStrategy s;
  s.kind = Kind::random_monotone;
  s.q = q;
  return s;
}

AdversaryStrategy AdversaryStrategy::make_degree_boost(int t) {
  if (t < 0) throw ParameterError("degree_boost needs t >= 0");
  AdversaryStrategy s;
  s.kind = Kind::degree_boost;
  s.t = t;
  return s;
}

AdversaryStrategy AdversaryStrategy::parse(const std::string& text) {
  auto [name, arg] = split_call(text);
  if (name == "none") return make_none();
  if (name == "random_monotone") return make_random_monotone(parse_double_arg(arg, "random_monotone"));
  if (name == "degree_boost") return make_degree_boost(static_cast<int>(parse_double_arg(arg, "degree_boost")));
  throw ParameterError("unknown adversary strategy: " + text);
}

std::string AdversaryStrategy::format() const {
  switch (kind) {
    case Kind::none: return "none";
    case Kind::random_monotone: return "random_monotone(" + format_double(q) + ")";
    case Kind::degree_boost: return "degree_boost(" + std::to_string(t) + ")";
  }
  return "none";
}

void ModelParams::validate() const {
  if (r < 2) throw ParameterError("model needs r >= 2");
  if (n < r) throw ParameterError("model needs n >= r");
  if (k < 1) throw ParameterError("model needs k >= 1");
  if (2 * k > n) throw ParameterError("model assumes k <= n/2");
  if (p < 0.0 || p > 1.0) throw ParameterError("model needs p in [0,1]");
  if (inside.kind == InsideStrategy::Kind::planted_clique_confuser && inside.m > n - k)
    throw ParameterError("confuser subset larger than the complement");
  if (adversary.kind == AdversaryStrategy::Kind::degree_boost && adversary.t > n - k)
    throw ParameterError("degree_boost count larger than the complement");
}

std::vector<Vertex> PlantedInstance::complement() const {
  std::vector<char> member(static_cast<std::size_t>(params.n), 0);
  for (Vertex v : planted_set) member[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(params.n - params.k));
  for (Vertex v = 0; v < params.n; ++v)
    if (!member[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

bool PlantedInstance::in_planted(Vertex v) const {
  return std::binary_search(planted_set.begin(), planted_set.end(), v);
}

namespace {

bool crosses(std::span<const int> subset, const std::vector<char>& in_s) {
  bool some_in = false, some_out = false;
  for (int v : subset) {
    (in_s[static_cast<std::size_t>(v)] ? some_in : some_out) = true;
    if (some_in && some_out) return true;
  }
  return false;
}

bool inside_planted(std::span<const int> subset, const std::vector<char>& in_s) {
  for (int v : subset)
    if (!in_s[static_cast<std::size_t>(v)]) return false;
  return true;
}

std::vector<char> membership(int n, const std::vector<Vertex>& set) {
  std::vector<char> m(static_cast<std::size_t>(n), 0);
  for (Vertex v : set) m[static_cast<std::size_t>(v)] = 1;
  return m;
}

std::vector<Edge> inside_edges_for(const InsideStrategy& strategy, const std::vector<Vertex>& comp,
                                   int r, std::uint64_t seed) {
  std::vector<Edge> out;
  switch (strategy.kind) {
    case InsideStrategy::Kind::none:
      break;
    case InsideStrategy::Kind::uniform: {
      SplitStream rng(seed, "inside");
      for_each_subset_of(std::span<const int>(comp), r, [&](std::span<const int> sub) {
        if (rng.next_unit() < strategy.q) out.emplace_back(sub.begin(), sub.end());
      });
      break;
    }
    case InsideStrategy::Kind::planted_clique_confuser: {
      SplitStream rng(seed, "inside");
      std::vector<Vertex> shuffled = comp;
      rng.shuffle(shuffled);
      std::vector<Vertex> spared(shuffled.begin(), shuffled.begin() + strategy.m);
      std::sort(spared.begin(), spared.end());
      for_each_subset_of(std::span<const int>(comp), r, [&](std::span<const int> sub) {
        for (int v : sub)
          if (std::binary_search(spared.begin(), spared.end(), v)) return;
        out.emplace_back(sub.begin(), sub.end());
      });
      break;
    }
  }
  return out;
}

}  // namespace

PlantedInstance generate_planted(const ModelParams& params, std::uint64_t seed) {
  params.validate();

  // Step 1: plant S = {0..k-1} pushed through a seed-derived permutation.
  std::vector<Vertex> perm(static_cast<std::size_t>(params.n));
  for (Vertex v = 0; v < params.n; ++v) perm[static_cast<std::size_t>(v)] = v;
  SplitStream perm_rng(seed, "perm");
  perm_rng.shuffle(perm);
  std::vector<Vertex> planted(perm.begin(), perm.begin() + params.k);
  std::sort(planted.begin(), planted.end());
  const std::vector<char> in_s = membership(params.n, planted);

  // Step 2: each crossing r-subset independently with probability p.
  std::vector<Edge> cross;
  SplitStream cross_rng(seed, "cross");
  for_each_subset(params.n, params.r, [&](std::span<const int> sub) {
    if (!crosses(sub, in_s)) return;
    if (cross_rng.next_unit() < params.p) cross.emplace_back(sub.begin(), sub.end());
  });

  // Step 3.
  std::vector<Vertex> comp;
  for (Vertex v = 0; v < params.n; ++v)
    if (!in_s[static_cast<std::size_t>(v)]) comp.push_back(v);
  std::vector<Edge> inside = inside_edges_for(params.inside, comp, params.r, seed);

  std::vector<Edge> all = cross;
  all.insert(all.end(), inside.begin(), inside.end());
  PlantedInstance partial{Hypergraph(params.n, params.r, all),
                          planted,
                          std::move(cross),
                          std::move(inside),
                          {},
                          params,
                          seed};

  // Step 4.
  return apply_adversary(partial, params.adversary, seed);
}

PlantedInstance apply_adversary(const PlantedInstance& instance, const AdversaryStrategy& strategy,
                                std::uint64_t seed) {
  const ModelParams& params = instance.params;
  const std::vector<char> in_s = membership(params.n, instance.planted_set);

  const auto guard_proposal = [&](std::span<const int> sub) {
    if (inside_planted(sub, in_s))
      throw InvariantError("adversary proposed an edge inside the planted set");
  };

  std::vector<Edge> added;
  switch (strategy.kind) {
    case AdversaryStrategy::Kind::none:
      break;
    case AdversaryStrategy::Kind::random_monotone: {
      SplitStream rng(seed, "adversary");
      for_each_subset(params.n, params.r, [&](std::span<const int> sub) {
        if (inside_planted(sub, in_s)) return;  // not eligible
        if (instance.hypergraph.has_edge(std::span<const Vertex>(sub.data(), sub.size()))) return;
        if (rng.next_unit() < strategy.q) {
          guard_proposal(sub);
          added.emplace_back(sub.begin(), sub.end());
        }
      });
      break;
    }
    case AdversaryStrategy::Kind::degree_boost: {
      // Saturate the boundary around the t lowest-degree complement vertices.
      std::vector<std::pair<int, Vertex>> by_degree;
      for (Vertex v = 0; v < params.n; ++v)
        if (!in_s[static_cast<std::size_t>(v)])
          by_degree.emplace_back(static_cast<int>(instance.hypergraph.incident_edges(v).size()), v);
      std::sort(by_degree.begin(), by_degree.end());
      std::vector<char> chosen(static_cast<std::size_t>(params.n), 0);
      for (int i = 0; i < strategy.t && i < static_cast<int>(by_degree.size()); ++i)
        chosen[static_cast<std::size_t>(by_degree[static_cast<std::size_t>(i)].second)] = 1;
      for_each_subset(params.n, params.r, [&](std::span<const int> sub) {
        if (!crosses(sub, in_s)) return;
        bool through = false;
        for (int v : sub)
          if (chosen[static_cast<std::size_t>(v)]) {
            through = true;
            break;
          }
        if (!through) return;
        if (instance.hypergraph.has_edge(std::span<const Vertex>(sub.data(), sub.size()))) return;
        guard_proposal(sub);
        added.emplace_back(sub.begin(), sub.end());
      });
      break;
    }
  }

  std::vector<Edge> adversarial = instance.adversarial_edges;
  adversarial.insert(adversarial.end(), added.begin(), added.end());
  std::sort(adversarial.begin(), adversarial.end());

  std::vector<Edge> all = instance.random_cross_edges;
  all.insert(all.end(), instance.inside_edges.begin(), instance.inside_edges.end());
  all.insert(all.end(), adversarial.begin(), adversarial.end());

  PlantedInstance out{Hypergraph(params.n, params.r, all),
                      instance.planted_set,
                      instance.random_cross_edges,
                      instance.inside_edges,
                      std::move(adversarial),
                      params,
                      instance.seed};
  if (!out.hypergraph.is_independent(out.planted_set))
    throw InvariantError("planted set lost independence after the adversary step");
  return out;
}

}  // namespace hypis
