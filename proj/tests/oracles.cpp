#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace oracles {

using smallcover::Z2Vec;

std::vector<int> canonical_cycle_oracle(std::vector<int> cycle) {
  std::vector<std::vector<int>> variants;
  const size_t k = cycle.size();
  for (int pass = 0; pass < 2; ++pass) {
    for (size_t r = 0; r < k; ++r) {
      std::vector<int> v;
      for (size_t i = 0; i < k; ++i) v.push_back(cycle[(r + i) % k]);
      variants.push_back(v);
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  return *std::min_element(variants.begin(), variants.end());
}

namespace {

// every k-subset of {0..n-1}
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == k) {
      fn(pick);
      return;
    }
    for (int i = from; i < n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

// every permutation of the subset taken as a cyclic order
void for_each_cyclic_order(const std::vector<int>& subset,
                           const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> perm = subset;
  std::sort(perm.begin(), perm.end());
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

bool belt_conditions(const SimplePolytope3& P, const std::vector<int>& cycle) {
  const size_t k = cycle.size();
  for (size_t i = 0; i < k; ++i)
    if (!P.adjacent(cycle[i], cycle[(i + 1) % k])) return false;
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a + 1; b < k; ++b)
      for (size_t c = b + 1; c < k; ++c)
        if (P.common_vertex(cycle[a], cycle[b], cycle[c])) return false;
  if (k == 4) {
    if (P.adjacent(cycle[0], cycle[2]) || P.adjacent(cycle[1], cycle[3])) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> brute_force_belts(const SimplePolytope3& P, int k) {
  std::set<std::vector<int>> found;
  for_each_subset(P.facet_count(), k, [&](const std::vector<int>& subset) {
    for_each_cyclic_order(subset, [&](const std::vector<int>& cycle) {
      if (belt_conditions(P, cycle)) found.insert(canonical_cycle_oracle(cycle));
    });
  });
  return {found.begin(), found.end()};
}

std::vector<std::vector<int>> brute_force_prismatic_circuits(const SimplePolytope3& P, int k) {
  std::set<std::vector<int>> found;
  const auto& edges = P.edges();

  for_each_subset(P.edge_count(), k, [&](const std::vector<int>& subset) {
    for_each_cyclic_order(subset, [&](const std::vector<int>& edge_cycle) {
      // the facet between consecutive crossed edges is their unique shared one
      std::vector<int> facet_cycle;
      for (size_t i = 0; i < edge_cycle.size(); ++i) {
        const auto& ea = edges[static_cast<size_t>(edge_cycle[i])];
        const auto& eb = edges[static_cast<size_t>(edge_cycle[(i + 1) % edge_cycle.size()])];
        int shared = -1;
        for (int fa : {ea.facet_a, ea.facet_b})
          for (int fb : {eb.facet_a, eb.facet_b})
            if (fa == fb) shared = fa;
        if (shared < 0) return;
        facet_cycle.push_back(shared);
      }
      std::set<int> facets(facet_cycle.begin(), facet_cycle.end());
      if (facets.size() != facet_cycle.size()) return;
      std::set<int> endpoints;
      for (int e : edge_cycle) {
        endpoints.insert(edges[static_cast<size_t>(e)].u);
        endpoints.insert(edges[static_cast<size_t>(e)].v);
      }
      if (endpoints.size() != 2 * edge_cycle.size()) return;
      found.insert(canonical_cycle_oracle(facet_cycle));
    });
  });
  return {found.begin(), found.end()};
}

std::vector<CharacteristicMap> brute_force_colorings(const SimplePolytope3& P) {
  const int F = P.facet_count();
  std::vector<CharacteristicMap> out;
  std::vector<Z2Vec> assignment(static_cast<size_t>(F));
  long long total = 1;
  for (int i = 0; i < F; ++i) total *= 7;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int f = 0; f < F; ++f) {
      assignment[static_cast<size_t>(f)] = Z2Vec(static_cast<unsigned>(c % 7 + 1));
      c /= 7;
    }
    bool ok = true;
    for (const auto& vi : P.vertices()) {
      if (!smallcover::independent_triple(assignment[static_cast<size_t>(vi.facets[0])],
                                          assignment[static_cast<size_t>(vi.facets[1])],
                                          assignment[static_cast<size_t>(vi.facets[2])])) {
        ok = false;
        break;
      }
    }
    if (ok) out.emplace_back(assignment);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracles
