#pragma once

#include <string>

#include "smallcover/coloring.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

/// Parses {"name": string optional, "facets": [[int,...],...]}.
/// Validation failures are errors, never silent repairs.
SimplePolytope3 parse_polytope(const std::string& json_text);

/// Emits the same schema with facets sorted by smallest vertex id; each cycle
/// is rotated to start at its smallest vertex, lesser neighbor next.
std::string serialize_polytope(const SimplePolytope3& P);

/// Parses {"colors": {"<facet index>": [b1,b2,b3]}} with b_i in {0,1},
/// coordinate i the coefficient of e_i.
CharacteristicMap parse_coloring(const std::string& json_text, int facet_count);

std::string serialize_coloring(const CharacteristicMap& map);

/// Resolves "builtin:<name>" / "builtin:prism:<k>" or reads the file.
SimplePolytope3 load_polytope(const std::string& path_or_builtin);

}  // namespace smallcover
