#include "qmachine/spa/interchange.hpp"

#include <fstream>
#include <stdexcept>

namespace qmachine::spa {

using nlohmann::json;

namespace {

std::vector<std::string> string_array(const json& doc, const char* field) {
    if (!doc.contains(field) || !doc[field].is_array())
        throw std::invalid_argument(std::string("sps document: missing array field '") + field +
                                    "'");
    std::vector<std::string> out;
    for (const auto& item : doc[field]) {
        if (!item.is_string())
            throw std::invalid_argument(std::string("sps document: field '") + field +
                                        "' must contain strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::pair<std::string, std::string> label_pair(const json& item, const char* field) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
        throw std::invalid_argument(std::string("sps document: entries of '") + field +
                                    "' must be [label, label] pairs");
    return {item[0].get<std::string>(), item[1].get<std::string>()};
}

} // namespace

StatePropertySpace sps_from_json(const json& doc) {
    if (!doc.is_object())
        throw std::invalid_argument("sps document: top level must be an object");
    StatePropertySpace sps;
    sps.states = string_array(doc, "states");
    sps.properties = string_array(doc, "properties");
    sps.xi.assign(sps.states.size(), std::vector<bool>(sps.properties.size(), false));
    if (!doc.contains("xi") || !doc["xi"].is_array())
        throw std::invalid_argument("sps document: missing array field 'xi'");
    for (const auto& item : doc["xi"]) {
        const auto [state, property] = label_pair(item, "xi");
        const int p = sps.state_index(state);
        const int a = sps.property_index(property);
        if (p < 0)
            throw std::invalid_argument("sps document: xi refers to unknown state '" + state +
                                        "'");
        if (a < 0)
            throw std::invalid_argument("sps document: xi refers to unknown property '" +
                                        property + "'");
        sps.xi[p][a] = true;
    }
    sps.validate();
    return sps;
}

std::optional<OrthoMap> ortho_from_json(const json& doc, const StatePropertySpace& sps) {
    if (!doc.contains("ortho"))
        return std::nullopt;
    if (!doc["ortho"].is_array())
        throw std::invalid_argument("sps document: 'ortho' must be an array of pairs");
    OrthoMap ortho;
    ortho.image.assign(sps.properties.size(), -1);
    for (const auto& item : doc["ortho"]) {
        const auto [first, second] = label_pair(item, "ortho");
        const int a = sps.property_index(first);
        const int b = sps.property_index(second);
        if (a < 0 || b < 0)
            throw std::invalid_argument("sps document: ortho refers to unknown property");
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
            if (ortho.image[x] >= 0 && ortho.image[x] != y)
                throw std::invalid_argument("sps document: ortho maps '" + sps.properties[x] +
                                            "' twice");
            ortho.image[x] = y;
        }
    }
    for (std::size_t a = 0; a < ortho.image.size(); ++a)
        if (ortho.image[a] < 0)
            throw std::invalid_argument("sps document: ortho misses property '" +
                                        sps.properties[a] + "'");
    return ortho;
}

json sps_to_json(const StatePropertySpace& sps, const std::optional<OrthoMap>& ortho) {
    sps.validate();
    json doc;
    doc["states"] = sps.states;
    doc["properties"] = sps.properties;
    json xi = json::array();
    for (int p = 0; p < sps.n_states(); ++p)
        for (int a = 0; a < sps.n_properties(); ++a)
            if (sps.xi[p][a])
                xi.push_back(json::array({sps.states[p], sps.properties[a]}));
    doc["xi"] = xi;
    if (ortho) {
        json pairs = json::array();
        for (int a = 0; a < sps.n_properties(); ++a)
            if (a <= (*ortho)(a))
                pairs.push_back(json::array({sps.properties[a], sps.properties[(*ortho)(a)]}));
        doc["ortho"] = pairs;
    }
    return doc;
}

std::pair<StatePropertySpace, std::optional<OrthoMap>> load_sps_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open sps document '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("cannot parse sps document '" + path + "': " + e.what());
    }
    StatePropertySpace sps = sps_from_json(doc);
    std::optional<OrthoMap> ortho = ortho_from_json(doc, sps);
    return {std::move(sps), std::move(ortho)};
}

void save_sps_file(const std::string& path, const StatePropertySpace& sps,
                   const std::optional<OrthoMap>& ortho) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write sps document '" + path + "'");
    out << sps_to_json(sps, ortho).dump(2) << "\n";
}

} // namespace qmachine::spa
