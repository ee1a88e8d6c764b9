#include "smallcover/belts.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace smallcover {

namespace {

std::string cycle_to_string(const std::vector<int>& c) {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

bool no_three_share_a_vertex(const SimplePolytope3& P, const std::vector<int>& facets) {
  const size_t k = facets.size();
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a + 1; b < k; ++b)
      for (size_t c = b + 1; c < k; ++c)
        if (P.common_vertex(facets[a], facets[b], facets[c])) return false;
  return true;
}

void check_cycle_shape(const SimplePolytope3& P, const std::vector<int>& cycle, int min_len) {
  if (static_cast<int>(cycle.size()) < min_len)
    fail(ErrorCode::BadParameter, "cycle " + cycle_to_string(cycle) + " shorter than " +
                                      std::to_string(min_len));
  std::set<int> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size())
    fail(ErrorCode::BadFacetId, "cycle " + cycle_to_string(cycle) + " repeats a facet");
  for (size_t i = 0; i < cycle.size(); ++i) {
    int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    if (!P.adjacent(a, b))
      fail(ErrorCode::BadFacetId, "consecutive facets " + std::to_string(a) + "," +
                                      std::to_string(b) + " are not adjacent");
  }
}

}  // namespace

std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
  const size_t k = cycle.size();
  std::vector<int> best = cycle;
  std::vector<int> cand(k);
  for (int dir = 0; dir < 2; ++dir) {
    for (size_t r = 0; r < k; ++r) {
      for (size_t i = 0; i < k; ++i) {
        size_t idx = dir == 0 ? (r + i) % k : (r + k - i) % k;
        cand[i] = cycle[idx];
      }
      if (cand < best) best = cand;
    }
  }
  return best;
}

Belt::Belt(const SimplePolytope3& P, std::vector<int> facet_cycle) {
  check_cycle_shape(P, facet_cycle, 3);
  if (!no_three_share_a_vertex(P, facet_cycle))
    fail(ErrorCode::BadFacetId,
         "three facets of " + cycle_to_string(facet_cycle) + " share a vertex");
  if (facet_cycle.size() == 4) {
    if (P.adjacent(facet_cycle[0], facet_cycle[2]) ||
        P.adjacent(facet_cycle[1], facet_cycle[3]))
      fail(ErrorCode::NotAFourBelt,
           "opposite facets of " + cycle_to_string(facet_cycle) + " intersect");
  }
  cycle_ = canonical_cycle(facet_cycle);
}

PrismaticCircuit::PrismaticCircuit(const SimplePolytope3& P, std::vector<int> facet_cycle) {
  check_cycle_shape(P, facet_cycle, 3);
  cycle_ = canonical_cycle(facet_cycle);
  const size_t k = cycle_.size();
  edge_cycle_.resize(k);
  std::set<int> endpoints;
  for (size_t i = 0; i < k; ++i) {
    auto e = P.shared_edge(cycle_[i], cycle_[(i + 1) % k]);
    edge_cycle_[i] = *e;  // adjacency already checked
    endpoints.insert(P.edges()[static_cast<size_t>(*e)].u);
    endpoints.insert(P.edges()[static_cast<size_t>(*e)].v);
  }
  if (endpoints.size() != 2 * k)
    fail(ErrorCode::BadFacetId, "circuit " + cycle_to_string(cycle_) +
                                    " crosses edges with shared endpoints (not prismatic)");
}

namespace {

// Enumerates cycles of length k in the facet adjacency graph with
// path[0] = min of the cycle and path[1] < path[k-1], which picks one
// representative per rotation/reflection class. `accept` filters candidates.
template <typename Accept, typename Emit>
void enumerate_cycles(const SimplePolytope3& P, int k, Accept accept, Emit emit) {
  const int F = P.facet_count();
  std::vector<int> path;
  std::vector<bool> used(static_cast<size_t>(F), false);
  path.reserve(static_cast<size_t>(k));

  auto dfs = [&](auto&& self, int start) -> void {
    if (static_cast<int>(path.size()) == k) {
      if (P.adjacent(path.back(), start) && path[1] < path.back() && accept(path)) emit(path);
      return;
    }
    for (int f : P.adjacent_facets(path.back())) {
      if (f <= start || used[static_cast<size_t>(f)]) continue;
      path.push_back(f);
      used[static_cast<size_t>(f)] = true;
      self(self, start);
      used[static_cast<size_t>(f)] = false;
      path.pop_back();
    }
  };

  for (int start = 0; start < F; ++start) {
    path.assign(1, start);
    used.assign(static_cast<size_t>(F), false);
    used[static_cast<size_t>(start)] = true;
    dfs(dfs, start);
  }
}

}  // namespace

std::vector<Belt> find_belts(const SimplePolytope3& P, int k) {
  if (k < 3) fail(ErrorCode::BadParameter, "belt length must be >= 3");
  std::vector<Belt> out;
  enumerate_cycles(
      P, k,
      [&](const std::vector<int>& cycle) {
        if (!no_three_share_a_vertex(P, cycle)) return false;
        if (k == 4 && (P.adjacent(cycle[0], cycle[2]) || P.adjacent(cycle[1], cycle[3])))
          return false;
        return true;
      },
      [&](const std::vector<int>& cycle) { out.emplace_back(P, cycle); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> find_degenerate_4_cycles(const SimplePolytope3& P) {
  std::vector<std::vector<int>> out;
  enumerate_cycles(
      P, 4,
      [&](const std::vector<int>& cycle) {
        if (!no_three_share_a_vertex(P, cycle)) return false;
        return P.adjacent(cycle[0], cycle[2]) || P.adjacent(cycle[1], cycle[3]);
      },
      [&](const std::vector<int>& cycle) { out.push_back(canonical_cycle(cycle)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrismaticCircuit> find_prismatic_circuits(const SimplePolytope3& P, int k) {
  if (k != 3 && k != 4)
    fail(ErrorCode::BadParameter, "prismatic circuits supported for k in {3,4}");
  std::vector<PrismaticCircuit> out;
  enumerate_cycles(
      P, k,
      [&](const std::vector<int>& cycle) {
        std::set<int> endpoints;
        for (size_t i = 0; i < cycle.size(); ++i) {
          auto e = P.shared_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
          const Edge& ed = P.edges()[static_cast<size_t>(*e)];
          endpoints.insert(ed.u);
          endpoints.insert(ed.v);
        }
        return endpoints.size() == 2 * cycle.size();
      },
      [&](const std::vector<int>& cycle) { out.emplace_back(P, cycle); });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_flag(const SimplePolytope3& P) {
  const int F = P.facet_count();
  for (int a = 0; a < F; ++a)
    for (int b = a + 1; b < F; ++b) {
      if (!P.adjacent(a, b)) continue;
      for (int c = b + 1; c < F; ++c) {
        if (!P.adjacent(a, c) || !P.adjacent(b, c)) continue;
        if (!P.common_vertex(a, b, c)) return false;
      }
    }
  // All pairwise-adjacent triples meet. In a simple 3-polytope other than the
  // simplex this forces the absence of pairwise-adjacent quadruples; verify
  // instead of assuming.
  if (!P.is_simplex()) {
    for (int a = 0; a < F; ++a)
      for (int b = a + 1; b < F; ++b) {
        if (!P.adjacent(a, b)) continue;
        for (int c = b + 1; c < F; ++c) {
          if (!P.adjacent(a, c) || !P.adjacent(b, c)) continue;
          for (int d = c + 1; d < F; ++d)
            if (P.adjacent(a, d) && P.adjacent(b, d) && P.adjacent(c, d))
              fail(ErrorCode::InternalInvariant,
                   "pairwise-adjacent facet quadruple in a non-simplex flag candidate");
        }
      }
  }
  return true;
}

PropositionP1Result proposition_p1_check(const SimplePolytope3& P) {
  if (P.is_simplex())
    fail(ErrorCode::SimplexExcluded,
         "the flag <=> no-prismatic-3-circuit equivalence excludes the 3-simplex");
  bool flag = is_flag(P);
  bool no_p3 = find_prismatic_circuits(P, 3).empty();
  return PropositionP1Result{flag, no_p3, flag == no_p3};
}

std::optional<Belt> circuit_to_belt(const SimplePolytope3& P, const PrismaticCircuit& c) {
  const auto& cyc = c.facet_cycle();
  if (c.length() == 3) return Belt(P, cyc);
  if (c.length() == 4) {
    if (P.adjacent(cyc[0], cyc[2]) || P.adjacent(cyc[1], cyc[3])) return std::nullopt;
    return Belt(P, cyc);
  }
  fail(ErrorCode::BadParameter, "circuit_to_belt expects length 3 or 4");
}

PrismaticCircuit belt_to_circuit(const SimplePolytope3& P, const Belt& b) {
  return PrismaticCircuit(P, b.facet_cycle());
}

}  // namespace smallcover
