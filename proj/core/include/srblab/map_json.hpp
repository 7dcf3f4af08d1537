#ifndef SRBLAB_MAP_JSON_HPP
#define SRBLAB_MAP_JSON_HPP

#include <json.hpp>

#include "srblab/map.hpp"

namespace srblab {

/// Builds a map from {"family": "...", "params": {...}}. Field names match
/// the parameter structs exactly; unknown fields are rejected. The
/// lorenz-type-generic family carries callables and is not constructible
/// from JSON.
SingularMap map_from_json(const nlohmann::json& j);

nlohmann::json map_to_json(const SingularMap& map);

} // namespace srblab

#endif
