// Brute-force reference implementations used only by tests. These are
// deliberately written against the raw definitions, independent of the
// library's search code.

#pragma once

#include <vector>

#include "smallcover/coloring.hpp"
#include "smallcover/polytope.hpp"

namespace oracles {

using smallcover::CharacteristicMap;
using smallcover::SimplePolytope3;

/// All k-belts as canonical cycles: every k-subset of facets, every cyclic
/// order, filtered by the belt conditions. Sorted, deduplicated.
std::vector<std::vector<int>> brute_force_belts(const SimplePolytope3& P, int k);

/// All prismatic k-circuits as canonical facet cycles, enumerated edge-first:
/// every k-subset of edges, every cyclic order, joined through shared facets.
std::vector<std::vector<int>> brute_force_prismatic_circuits(const SimplePolytope3& P, int k);

/// All valid colorings by scanning the full 7^F assignment space.
std::vector<CharacteristicMap> brute_force_colorings(const SimplePolytope3& P);

/// Canonical cycle form, reimplemented here.
std::vector<int> canonical_cycle_oracle(std::vector<int> cycle);

}  // namespace oracles
