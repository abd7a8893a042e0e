#include "hypis/instance_json.hpp"

#include <algorithm>
#include <fstream>

namespace hypis {

namespace {

nlohmann::json edges_to_json(const std::vector<Edge>& edges) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Edge& e : edges) arr.push_back(e);
  return arr;
}

std::vector<Edge> edges_from_json(const nlohmann::json& arr) {
  std::vector<Edge> out;
  for (const auto& item : arr) out.push_back(item.get<Edge>());
  return out;
}

}  // namespace

nlohmann::json instance_to_json(const PlantedInstance& instance) {
  nlohmann::json j;
  j["schema_version"] = kInstanceSchemaVersion;
  j["n"] = instance.params.n;
  j["k"] = instance.params.k;
  j["r"] = instance.params.r;
  j["p"] = instance.params.p;
  j["seed"] = instance.seed;
  j["planted_set"] = instance.planted_set;
  j["edges"]["random_cross"] = edges_to_json(instance.random_cross_edges);
  j["edges"]["inside"] = edges_to_json(instance.inside_edges);
  j["edges"]["adversarial"] = edges_to_json(instance.adversarial_edges);
  j["strategies"]["inside"] = instance.params.inside.format();
  j["strategies"]["adversary"] = instance.params.adversary.format();
  return j;
}

std::string instance_to_canonical_bytes(const PlantedInstance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

PlantedInstance instance_from_json(const nlohmann::json& j) {
  if (j.at("schema_version").get<int>() != kInstanceSchemaVersion)
    throw ParameterError("unsupported instance schema version");
  ModelParams params;
  params.n = j.at("n").get<int>();
  params.k = j.at("k").get<int>();
  params.r = j.at("r").get<int>();
  params.p = j.at("p").get<double>();
  params.inside = InsideStrategy::parse(j.at("strategies").at("inside").get<std::string>());
  params.adversary = AdversaryStrategy::parse(j.at("strategies").at("adversary").get<std::string>());
  params.validate();

  auto planted = j.at("planted_set").get<std::vector<Vertex>>();
  if (static_cast<int>(planted.size()) != params.k)
    throw ParameterError("planted_set size does not match k");
  auto cross = edges_from_json(j.at("edges").at("random_cross"));
  auto inside = edges_from_json(j.at("edges").at("inside"));
  auto adversarial = edges_from_json(j.at("edges").at("adversarial"));

  std::vector<Edge> all = cross;
  all.insert(all.end(), inside.begin(), inside.end());
  all.insert(all.end(), adversarial.begin(), adversarial.end());
  const std::size_t group_total = all.size();
  Hypergraph h(params.n, params.r, all);  // validates ranges, sorting, duplicates
  if (h.edge_count() != group_total) throw ParameterError("edge groups overlap");
  if (!h.is_independent(planted)) throw ParameterError("planted set is not independent");

  PlantedInstance instance{std::move(h),
                           std::move(planted),
                           std::move(cross),
                           std::move(inside),
                           std::move(adversarial),
                           params,
                           j.at("seed").get<std::uint64_t>()};
  return instance;
}

PlantedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open instance file: " + path);
  nlohmann::json j;
  in >> j;
  return instance_from_json(j);
}

void save_instance(const std::string& path, const PlantedInstance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write instance file: " + path);
  out << instance_to_canonical_bytes(instance);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace hypis
