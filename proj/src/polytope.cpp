#include "smallcover/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace smallcover {

namespace {

std::string facet_to_string(const std::vector<int>& facet) {
  std::string s = "[";
  for (size_t i = 0; i < facet.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(facet[i]);
  }
  return s + "]";
}

}  // namespace

SimplePolytope3 SimplePolytope3::from_facets(std::string name,
                                             std::vector<std::vector<int>> facets) {
  SimplePolytope3 P;
  P.name_ = std::move(name);
  P.facets_ = std::move(facets);
  P.build_derived();
  return P;
}

void SimplePolytope3::build_derived() {
  const int F = static_cast<int>(facets_.size());
  if (F < 4)
    fail(ErrorCode::SchemaError, "a simple 3-polytope has at least 4 facets, got " +
                                     std::to_string(F));

  for (int f = 0; f < F; ++f) {
    const auto& cycle = facets_[static_cast<size_t>(f)];
    if (cycle.size() < 3)
      fail(ErrorCode::SchemaError,
           "facet " + std::to_string(f) + " has fewer than 3 vertices");
    std::set<int> seen;
    for (int v : cycle) {
      if (v < 0) fail(ErrorCode::SchemaError, "negative vertex id in facet " + std::to_string(f));
      if (!seen.insert(v).second)
        fail(ErrorCode::SchemaError, "vertex " + std::to_string(v) +
                                         " repeated in facet " + std::to_string(f));
    }
  }

  // duplicate facets (same vertex set)
  {
    std::map<std::vector<int>, int> by_set;
    for (int f = 0; f < F; ++f) {
      std::vector<int> key = facets_[static_cast<size_t>(f)];
      std::sort(key.begin(), key.end());
      auto [it, inserted] = by_set.emplace(std::move(key), f);
      if (!inserted)
        fail(ErrorCode::DuplicateFacet, "facets " + std::to_string(it->second) + " and " +
                                            std::to_string(f) + " have the same vertex set");
    }
  }

  // vertex -> incident facets
  std::map<int, std::vector<int>> incident;
  for (int f = 0; f < F; ++f)
    for (int v : facets_[static_cast<size_t>(f)]) incident[v].push_back(f);

  for (auto& [v, fs] : incident) {
    if (fs.size() != 3)
      fail(ErrorCode::NotSimple, "vertex " + std::to_string(v) + " lies in " +
                                     std::to_string(fs.size()) + " facets, expected 3");
    std::sort(fs.begin(), fs.end());
  }

  // edges from consecutive pairs of each facet cycle
  std::map<std::pair<int, int>, std::vector<int>> edge_facets;
  for (int f = 0; f < F; ++f) {
    const auto& cycle = facets_[static_cast<size_t>(f)];
    const size_t n = cycle.size();
    for (size_t i = 0; i < n; ++i) {
      int a = cycle[i], b = cycle[(i + 1) % n];
      edge_facets[{std::min(a, b), std::max(a, b)}].push_back(f);
    }
  }
  for (auto& [uv, fs] : edge_facets) {
    if (fs.size() != 2)
      fail(ErrorCode::NotClosed, "edge (" + std::to_string(uv.first) + "," +
                                     std::to_string(uv.second) + ") lies in " +
                                     std::to_string(fs.size()) + " facets, expected 2");
    std::sort(fs.begin(), fs.end());
  }

  // no two facets may share more than one edge
  {
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& [uv, fs] : edge_facets) ++pair_count[{fs[0], fs[1]}];
    for (const auto& [pair, count] : pair_count)
      if (count > 1)
        fail(ErrorCode::NotPolytopal, "facets " + std::to_string(pair.first) + " and " +
                                          std::to_string(pair.second) + " share " +
                                          std::to_string(count) + " edges");
  }

  const int V = static_cast<int>(incident.size());
  const int E = static_cast<int>(edge_facets.size());
  if (V - E + F != 2)
    fail(ErrorCode::EulerViolation, "V-E+F = " + std::to_string(V - E + F) +
                                        " != 2 (V=" + std::to_string(V) +
                                        " E=" + std::to_string(E) +
                                        " F=" + std::to_string(F) + ")");

  edges_.reserve(static_cast<size_t>(E));
  for (const auto& [uv, fs] : edge_facets)
    edges_.push_back(Edge{uv.first, uv.second, fs[0], fs[1]});

  int max_id = 0;
  for (const auto& [v, fs] : incident) max_id = std::max(max_id, v);
  vertex_index_.assign(static_cast<size_t>(max_id) + 1, -1);
  vertices_.reserve(static_cast<size_t>(V));
  for (const auto& [v, fs] : incident) {
    vertex_index_[static_cast<size_t>(v)] = static_cast<int>(vertices_.size());
    vertices_.push_back(VertexInfo{v, {fs[0], fs[1], fs[2]}});
  }

  adjacency_.assign(static_cast<size_t>(F), {});
  edge_of_pair_.assign(static_cast<size_t>(F), std::vector<int>(static_cast<size_t>(F), -1));
  for (int e = 0; e < E; ++e) {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    adjacency_[static_cast<size_t>(ed.facet_a)].push_back(ed.facet_b);
    adjacency_[static_cast<size_t>(ed.facet_b)].push_back(ed.facet_a);
    edge_of_pair_[static_cast<size_t>(ed.facet_a)][static_cast<size_t>(ed.facet_b)] = e;
    edge_of_pair_[static_cast<size_t>(ed.facet_b)][static_cast<size_t>(ed.facet_a)] = e;
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());

  // facet adjacency graph must be connected
  {
    std::vector<bool> seen(static_cast<size_t>(F), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int g : adjacency_[static_cast<size_t>(f)])
        if (!seen[static_cast<size_t>(g)]) {
          seen[static_cast<size_t>(g)] = true;
          ++reached;
          stack.push_back(g);
        }
    }
    if (reached != F)
      fail(ErrorCode::Disconnected, "facet adjacency graph is disconnected");
  }

  // cyclic order consistency: around each vertex the three incident facets
  // pairwise share an edge ending there
  for (const auto& vi : vertices_) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        auto e = shared_edge(vi.facets[static_cast<size_t>(i)], vi.facets[static_cast<size_t>(j)]);
        if (!e || (edges_[static_cast<size_t>(*e)].u != vi.id &&
                   edges_[static_cast<size_t>(*e)].v != vi.id))
          fail(ErrorCode::NotPolytopal,
               "facets at vertex " + std::to_string(vi.id) + " do not pairwise meet there");
      }
  }
}

bool SimplePolytope3::adjacent(int f1, int f2) const {
  check_facet_id(f1);
  check_facet_id(f2);
  if (f1 == f2) return false;
  return edge_of_pair_[static_cast<size_t>(f1)][static_cast<size_t>(f2)] >= 0;
}

const std::vector<int>& SimplePolytope3::adjacent_facets(int f) const {
  check_facet_id(f);
  return adjacency_[static_cast<size_t>(f)];
}

std::optional<int> SimplePolytope3::shared_edge(int f1, int f2) const {
  check_facet_id(f1);
  check_facet_id(f2);
  if (f1 == f2) return std::nullopt;
  int e = edge_of_pair_[static_cast<size_t>(f1)][static_cast<size_t>(f2)];
  if (e < 0) return std::nullopt;
  return e;
}

std::optional<int> SimplePolytope3::common_vertex(int f1, int f2, int f3) const {
  check_facet_id(f1);
  check_facet_id(f2);
  check_facet_id(f3);
  if (f1 == f2 || f1 == f3 || f2 == f3)
    fail(ErrorCode::BadFacetId, "facet triple must be distinct");
  std::array<int, 3> key{f1, f2, f3};
  std::sort(key.begin(), key.end());
  for (const auto& vi : vertices_)
    if (vi.facets == key) return vi.id;
  return std::nullopt;
}

const VertexInfo& SimplePolytope3::vertex_info(int vertex_id) const {
  if (vertex_id < 0 || vertex_id >= static_cast<int>(vertex_index_.size()) ||
      vertex_index_[static_cast<size_t>(vertex_id)] < 0)
    fail(ErrorCode::BadVertex, "no vertex with id " + std::to_string(vertex_id));
  return vertices_[static_cast<size_t>(vertex_index_[static_cast<size_t>(vertex_id)])];
}

const std::array<int, 3>& SimplePolytope3::facets_of_vertex(int vertex_id) const {
  return vertex_info(vertex_id).facets;
}

void SimplePolytope3::check_facet_id(int f) const {
  if (f < 0 || f >= facet_count())
    fail(ErrorCode::BadFacetId, "facet id " + std::to_string(f) + " out of range");
}

SimplePolytope3 SimplePolytope3::builtin(const std::string& name,
                                         std::optional<int> parameter) {
  if (name == "simplex") {
    return from_facets("simplex", {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  }
  if (name == "cube") {
    return from_facets("cube", {
                                   {0, 1, 2, 3},  // bottom
                                   {4, 7, 6, 5},  // top
                                   {0, 4, 5, 1},  // front
                                   {1, 5, 6, 2},  // right
                                   {2, 6, 7, 3},  // back
                                   {3, 7, 4, 0},  // left
                               });
  }
  if (name == "prism") {
    if (!parameter) fail(ErrorCode::BadParameter, "prism requires a parameter k");
    int k = *parameter;
    if (k < 3) fail(ErrorCode::BadParameter, "prism parameter must be >= 3, got " + std::to_string(k));
    std::vector<std::vector<int>> fs;
    std::vector<int> top, bottom;
    for (int i = 0; i < k; ++i) bottom.push_back(i);
    for (int i = 0; i < k; ++i) top.push_back(k + i);
    fs.push_back(bottom);
    fs.push_back(top);
    for (int i = 0; i < k; ++i) {
      int j = (i + 1) % k;
      fs.push_back({i, j, k + j, k + i});
    }
    return from_facets("prism(" + std::to_string(k) + ")", std::move(fs));
  }
  if (name == "dodecahedron") {
    // rings: top pentagon 0..4, upper band 5..9, lower band 10..14, bottom 15..19
    std::vector<std::vector<int>> fs;
    fs.push_back({0, 1, 2, 3, 4});
    for (int i = 0; i < 5; ++i) {
      int j = (i + 1) % 5;
      fs.push_back({i, j, 5 + j, 10 + i, 5 + i});
    }
    for (int i = 0; i < 5; ++i) {
      int j = (i + 1) % 5;
      fs.push_back({15 + i, 15 + j, 10 + j, 5 + j, 10 + i});
    }
    fs.push_back({15, 16, 17, 18, 19});
    return from_facets("dodecahedron", std::move(fs));
  }
  fail(ErrorCode::UnknownBuiltin, "unknown builtin polytope '" + name + "'");
}

FaceRef FaceRef::edge(int f1, int f2) {
  FaceRef r{Kind::Edge, {f1, f2}};
  std::sort(r.facet_ids.begin(), r.facet_ids.end());
  return r;
}

FaceRef FaceRef::vertex(int f1, int f2, int f3) {
  FaceRef r{Kind::Vertex, {f1, f2, f3}};
  std::sort(r.facet_ids.begin(), r.facet_ids.end());
  return r;
}

void FaceRef::validate(const SimplePolytope3& P) const {
  switch (kind) {
    case Kind::Polytope:
      if (!facet_ids.empty()) fail(ErrorCode::BadFace, "whole-polytope face takes no facet ids");
      return;
    case Kind::Facet:
      if (facet_ids.size() != 1) fail(ErrorCode::BadFace, "facet face needs exactly 1 id");
      P.check_facet_id(facet_ids[0]);
      return;
    case Kind::Edge: {
      if (facet_ids.size() != 2 || facet_ids[0] == facet_ids[1])
        fail(ErrorCode::BadFace, "edge face needs 2 distinct facet ids");
      if (!P.shared_edge(facet_ids[0], facet_ids[1]))
        fail(ErrorCode::BadFace, "facets " + facet_to_string(facet_ids) + " share no edge");
      return;
    }
    case Kind::Vertex: {
      if (facet_ids.size() != 3)
        fail(ErrorCode::BadFace, "vertex face needs 3 distinct facet ids");
      if (!P.common_vertex(facet_ids[0], facet_ids[1], facet_ids[2]))
        fail(ErrorCode::BadFace, "facets " + facet_to_string(facet_ids) + " share no vertex");
      return;
    }
  }
  fail(ErrorCode::BadFace, "corrupt face kind");
}

}  // namespace smallcover
