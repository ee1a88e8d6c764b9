#include "smallcover/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace smallcover {

using nlohmann::json;

SimplePolytope3 parse_polytope(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array())
    fail(ErrorCode::SchemaError, "document must be an object with a \"facets\" array");

  std::string name = "polytope";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail(ErrorCode::SchemaError, "\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }

  std::vector<std::vector<int>> facets;
  for (const auto& facet : doc["facets"]) {
    if (!facet.is_array()) fail(ErrorCode::SchemaError, "each facet must be an array");
    std::vector<int> cycle;
    for (const auto& v : facet) {
      if (!v.is_number_integer())
        fail(ErrorCode::SchemaError, "vertex ids must be integers");
      cycle.push_back(v.get<int>());
    }
    facets.push_back(std::move(cycle));
  }
  return SimplePolytope3::from_facets(name, std::move(facets));
}

std::string serialize_polytope(const SimplePolytope3& P) {
  std::vector<std::vector<int>> facets;
  for (const auto& cycle : P.facets()) {
    // rotate to the smallest vertex; choose the direction whose next vertex
    // is smaller, so the emitted cycle is canonical
    size_t n = cycle.size();
    size_t at = static_cast<size_t>(
        std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
    std::vector<int> fwd(n), bwd(n);
    for (size_t i = 0; i < n; ++i) {
      fwd[i] = cycle[(at + i) % n];
      bwd[i] = cycle[(at + n - i) % n];
    }
    facets.push_back(std::min(fwd, bwd));
  }
  std::sort(facets.begin(), facets.end());

  json doc;
  doc["name"] = P.name();
  doc["facets"] = facets;
  return doc.dump();
}

CharacteristicMap parse_coloring(const std::string& json_text, int facet_count) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("colors") || !doc["colors"].is_object())
    fail(ErrorCode::SchemaError, "document must be an object with a \"colors\" object");

  std::vector<Z2Vec> colors(static_cast<size_t>(facet_count));
  std::vector<bool> seen(static_cast<size_t>(facet_count), false);
  for (const auto& [key, value] : doc["colors"].items()) {
    int facet = -1;
    try {
      facet = std::stoi(key);
    } catch (const std::exception&) {
      fail(ErrorCode::SchemaError, "color key '" + key + "' is not a facet index");
    }
    if (facet < 0 || facet >= facet_count)
      fail(ErrorCode::MissingFacet, "color key " + key + " out of facet range");
    if (!value.is_array() || value.size() != 3)
      fail(ErrorCode::SchemaError, "color of facet " + key + " must be [b1,b2,b3]");
    unsigned bits = 0;
    for (int i = 0; i < 3; ++i) {
      int b = value[static_cast<size_t>(i)].get<int>();
      if (b != 0 && b != 1)
        fail(ErrorCode::SchemaError, "color coordinates must be 0 or 1");
      bits |= static_cast<unsigned>(b) << i;
    }
    colors[static_cast<size_t>(facet)] = Z2Vec(bits);
    seen[static_cast<size_t>(facet)] = true;
  }
  for (int f = 0; f < facet_count; ++f)
    if (!seen[static_cast<size_t>(f)])
      fail(ErrorCode::MissingFacet, "facet " + std::to_string(f) + " has no color");
  return CharacteristicMap(std::move(colors));
}

std::string serialize_coloring(const CharacteristicMap& map) {
  json colors = json::object();
  for (int f = 0; f < map.facet_count(); ++f) {
    unsigned bits = map.color(f).bits();
    colors[std::to_string(f)] = {bits & 1u, (bits >> 1) & 1u, (bits >> 2) & 1u};
  }
  json doc;
  doc["colors"] = colors;
  return doc.dump();
}

SimplePolytope3 load_polytope(const std::string& path_or_builtin) {
  if (path_or_builtin.rfind("builtin:", 0) == 0) {
    std::string rest = path_or_builtin.substr(8);
    auto colon = rest.find(':');
    if (colon == std::string::npos) return SimplePolytope3::builtin(rest);
    std::string name = rest.substr(0, colon);
    int param = 0;
    try {
      param = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::BadParameter, "bad builtin parameter in '" + path_or_builtin + "'");
    }
    return SimplePolytope3::builtin(name, param);
  }
  std::ifstream in(path_or_builtin);
  if (!in) fail(ErrorCode::SchemaError, "cannot open '" + path_or_builtin + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_polytope(buffer.str());
}

}  // namespace smallcover
