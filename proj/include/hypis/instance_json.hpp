#pragma once

#include <string>

#include <json.hpp>

#include "hypis/planted_model.hpp"

namespace hypis {

inline constexpr int kInstanceSchemaVersion = 1;

nlohmann::json instance_to_json(const PlantedInstance& instance);

/// Key-sorted, 2-space indented, trailing newline. Identical instances
/// serialize to identical bytes.
std::string instance_to_canonical_bytes(const PlantedInstance& instance);

/// Parses and revalidates: edge groups must be disjoint, their union must
/// match, and the planted set must be independent.
PlantedInstance instance_from_json(const nlohmann::json& j);

PlantedInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const PlantedInstance& instance);

}  // namespace hypis
