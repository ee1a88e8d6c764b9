#pragma once

#include <optional>
#include <vector>

#include "smallcover/polytope.hpp"

namespace smallcover {

/// Cyclic sequence of k distinct facets, consecutive ones adjacent, no three
/// sharing a vertex; a 4-belt additionally has disjoint opposite pairs.
/// Stored in canonical rotation/reflection (lexicographically least).
class Belt {
 public:
  /// Validates the belt conditions against P and canonicalizes.
  Belt(const SimplePolytope3& P, std::vector<int> facet_cycle);

  const std::vector<int>& facet_cycle() const { return cycle_; }
  int length() const { return static_cast<int>(cycle_.size()); }

  friend bool operator==(const Belt& a, const Belt& b) { return a.cycle_ == b.cycle_; }
  friend bool operator<(const Belt& a, const Belt& b) { return a.cycle_ < b.cycle_; }

 private:
  std::vector<int> cycle_;
};

/// Prismatic k-circuit: cyclic facet sequence plus the crossed edges. Edge i
/// is the unique edge shared by facets i and i+1 (cyclically); the prismatic
/// condition is that all 2k endpoints of the crossed edges are distinct.
class PrismaticCircuit {
 public:
  PrismaticCircuit(const SimplePolytope3& P, std::vector<int> facet_cycle);

  const std::vector<int>& facet_cycle() const { return cycle_; }
  /// Edge indices into P.edges(); entry i joins facets i and i+1 of the cycle.
  const std::vector<int>& edge_cycle() const { return edge_cycle_; }
  int length() const { return static_cast<int>(cycle_.size()); }

  friend bool operator==(const PrismaticCircuit& a, const PrismaticCircuit& b) {
    return a.cycle_ == b.cycle_;
  }
  friend bool operator<(const PrismaticCircuit& a, const PrismaticCircuit& b) {
    return a.cycle_ < b.cycle_;
  }

 private:
  std::vector<int> cycle_;
  std::vector<int> edge_cycle_;
};

/// Lexicographically least sequence over all rotations and both reflections.
std::vector<int> canonical_cycle(const std::vector<int>& cycle);

/// All belts of length exactly k, canonical and sorted. Exhaustive.
std::vector<Belt> find_belts(const SimplePolytope3& P, int k);

/// All prismatic k-circuits (k=3 or 4), canonical and sorted. Exhaustive.
std::vector<PrismaticCircuit> find_prismatic_circuits(const SimplePolytope3& P, int k);

/// 4-facet cycles that satisfy every 4-belt condition except disjointness of
/// the opposite pairs. Diagnostic only.
std::vector<std::vector<int>> find_degenerate_4_cycles(const SimplePolytope3& P);

/// Flagness by the definition on facet triples: every pairwise-adjacent
/// triple has a common vertex. When the triple check passes and P is not the
/// simplex, the absence of larger pairwise-adjacent families is asserted
/// rather than assumed.
bool is_flag(const SimplePolytope3& P);

struct PropositionP1Result {
  bool flag;
  bool no_prismatic_3;
  bool agree;
};

/// Computes both sides of "flag <=> no prismatic 3-circuit" independently.
/// Throws SimplexExcluded for the 3-simplex, where the equivalence is not
/// claimed.
PropositionP1Result proposition_p1_check(const SimplePolytope3& P);

/// The belt determined by a prismatic circuit: always present for k=3; for
/// k=4 present exactly when the opposite facet pairs are disjoint.
std::optional<Belt> circuit_to_belt(const SimplePolytope3& P, const PrismaticCircuit& c);

/// The prismatic circuit through a belt's consecutive-intersection edges.
PrismaticCircuit belt_to_circuit(const SimplePolytope3& P, const Belt& b);

}  // namespace smallcover
