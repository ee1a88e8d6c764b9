#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "smallcover/errors.hpp"

namespace smallcover {

/// An edge of a simple 3-polytope: vertex pair with its two incident facets.
struct Edge {
  int u, v;              // vertex ids, u < v
  int facet_a, facet_b;  // facet indices, facet_a < facet_b
};

/// A vertex with its three incident facets (sorted). Simplicity makes the
/// triple a canonical identifier for the vertex.
struct VertexInfo {
  int id;
  std::array<int, 3> facets;
};

/// Combinatorial simple 3-polytope. Facets are cyclic vertex lists; the
/// edge/vertex/adjacency structure is derived and validated on construction.
/// Immutable after construction.
class SimplePolytope3 {
 public:
  /// Validates all structural invariants: simplicity, closedness, Euler
  /// relation, no duplicated facets, no two facets sharing two edges,
  /// connected facet adjacency. Throws Error on any violation.
  static SimplePolytope3 from_facets(std::string name,
                                     std::vector<std::vector<int>> facets);

  /// Builtin corpus polytopes: "simplex", "cube", "prism" (needs k >= 3),
  /// "dodecahedron".
  static SimplePolytope3 builtin(const std::string& name,
                                 std::optional<int> parameter = std::nullopt);

  const std::string& name() const { return name_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::vector<int>>& facets() const { return facets_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexInfo>& vertices() const { return vertices_; }

  bool adjacent(int f1, int f2) const;
  const std::vector<int>& adjacent_facets(int f) const;

  /// Index into edges() of the unique edge shared by two facets, if any.
  std::optional<int> shared_edge(int f1, int f2) const;

  /// The unique vertex lying in all three facets, if the triple meets.
  std::optional<int> common_vertex(int f1, int f2, int f3) const;

  /// The two facet triples at the endpoints of an edge.
  const VertexInfo& vertex_info(int vertex_id) const;

  /// Facets incident to a vertex (always 3).
  const std::array<int, 3>& facets_of_vertex(int vertex_id) const;

  bool is_simplex() const { return facet_count() == 4; }

  void check_facet_id(int f) const;

 private:
  SimplePolytope3() = default;
  void build_derived();

  std::string name_;
  std::vector<std::vector<int>> facets_;
  std::vector<Edge> edges_;
  std::vector<VertexInfo> vertices_;            // sorted by id
  std::vector<std::vector<int>> adjacency_;     // per facet, sorted neighbor list
  std::vector<std::vector<int>> edge_of_pair_;  // facet x facet -> edge index or -1
  std::vector<int> vertex_index_;               // vertex id -> index into vertices_
};

/// Proper face of a polytope identified by the facets containing it.
struct FaceRef {
  enum class Kind { Polytope, Facet, Edge, Vertex };

  Kind kind;
  std::vector<int> facet_ids;  // sorted; 0, 1, 2 or 3 entries

  static FaceRef whole_polytope() { return {Kind::Polytope, {}}; }
  static FaceRef facet(int f) { return {Kind::Facet, {f}}; }
  static FaceRef edge(int f1, int f2);
  static FaceRef vertex(int f1, int f2, int f3);

  /// Throws BadFace unless the ids intersect in a face of the stated kind.
  void validate(const SimplePolytope3& P) const;
};

}  // namespace smallcover
