#pragma once

#include "qmachine/spa/orthocomplement.hpp"
#include "qmachine/spa/state_property_space.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>

namespace qmachine::spa {

/// State property space interchange document. Normative fields:
///   states     — array of state labels
///   properties — array of property labels
///   xi         — array of [state, property] label pairs
///   ortho      — optional array of [property, property] label pairs
/// Malformed documents raise std::invalid_argument.
StatePropertySpace sps_from_json(const nlohmann::json& doc);
std::optional<OrthoMap> ortho_from_json(const nlohmann::json& doc, const StatePropertySpace& sps);
nlohmann::json sps_to_json(const StatePropertySpace& sps,
                           const std::optional<OrthoMap>& ortho = std::nullopt);

std::pair<StatePropertySpace, std::optional<OrthoMap>> load_sps_file(const std::string& path);
void save_sps_file(const std::string& path, const StatePropertySpace& sps,
                   const std::optional<OrthoMap>& ortho = std::nullopt);

} // namespace qmachine::spa
