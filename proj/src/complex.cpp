#include "smallcover/complex.hpp"

#include <algorithm>
#include <numeric>

namespace smallcover {

namespace {

// plain union-find with path halving
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      parent_[static_cast<size_t>(x)] =
          parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
      x = parent_[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<size_t>(find(a))] = find(b); }
  // root -> dense class id; returns class count
  int compress(std::vector<int>& class_of) {
    const int n = static_cast<int>(parent_.size());
    class_of.assign(static_cast<size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      int r = find(i);
      if (class_of[static_cast<size_t>(r)] < 0) class_of[static_cast<size_t>(r)] = next++;
    }
    for (int i = 0; i < n; ++i)
      class_of[static_cast<size_t>(i)] = class_of[static_cast<size_t>(find(i))];
    return next;
  }

 private:
  std::vector<int> parent_;
};

// merges (face, g) with (face, g*h) for every h in the face subgroup
void identify_face_copies(UnionFind& uf, int face, const SubgroupZ2& G) {
  for (int g = 0; g < 8; ++g)
    for (Z2Vec h : G.elements())
      uf.unite(face * 8 + g, face * 8 + (g ^ h.bits()));
}

}  // namespace

int IdentificationComplex::euler_characteristic() const {
  int chi = 0;
  for (size_t d = 0; d < cell_counts_.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * cell_counts_[d];
  return chi;
}

void IdentificationComplex::finish() {
  // closedness: every codim-1 class must see exactly two top-cell sides
  std::vector<int> sides(static_cast<size_t>(cell_counts_[static_cast<size_t>(dimension_ - 1)]),
                         0);
  for (const Gluing& g : gluings_) ++sides[static_cast<size_t>(g.face_class)];
  for (int count : sides)
    if (count != 1)  // each gluing record carries both sides of one class
      fail(dimension_ == 3 ? ErrorCode::NotClosedManifold : ErrorCode::NotClosedSurface,
           "a codimension-1 cell does not bound exactly two sides");

  UnionFind uf(top_cells_);
  for (const Gluing& g : gluings_) uf.unite(g.top_a, g.top_b);
  components_ = uf.compress(component_of_top_);
}

int IdentificationComplex::component_count() const { return components_; }

bool IdentificationComplex::orientable() const {
  auto per = component_orientable();
  return std::all_of(per.begin(), per.end(), [](bool b) { return b; });
}

std::vector<bool> IdentificationComplex::component_orientable() const {
  // parity 2-coloring: glued copies must take opposite orientations
  std::vector<int> sign(static_cast<size_t>(top_cells_), 0);
  std::vector<bool> ok(static_cast<size_t>(components_), true);
  std::vector<std::vector<std::pair<int, int>>> nbrs(static_cast<size_t>(top_cells_));
  for (const Gluing& g : gluings_) {
    nbrs[static_cast<size_t>(g.top_a)].push_back({g.top_b, -1});
    nbrs[static_cast<size_t>(g.top_b)].push_back({g.top_a, -1});
  }
  for (int start = 0; start < top_cells_; ++start) {
    if (sign[static_cast<size_t>(start)] != 0) continue;
    sign[static_cast<size_t>(start)] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (auto [d, flip] : nbrs[static_cast<size_t>(c)]) {
        int want = sign[static_cast<size_t>(c)] * flip;
        if (sign[static_cast<size_t>(d)] == 0) {
          sign[static_cast<size_t>(d)] = want;
          stack.push_back(d);
        } else if (sign[static_cast<size_t>(d)] != want) {
          ok[static_cast<size_t>(component_of_top_[static_cast<size_t>(d)])] = false;
        }
      }
    }
  }
  return ok;
}

std::vector<int> IdentificationComplex::component_euler() const {
  std::vector<int> chi(static_cast<size_t>(components_), 0);
  for (size_t d = 0; d < class_component_.size(); ++d)
    for (int comp : class_component_[d])
      if (comp >= 0) chi[static_cast<size_t>(comp)] += (d % 2 == 0 ? 1 : -1);
  return chi;
}

std::string IdentificationComplex::dump() const {
  std::string out;
  for (size_t d = 0; d < cell_counts_.size(); ++d)
    out += "cells[" + std::to_string(d) + "]=" + std::to_string(cell_counts_[d]) + "\n";
  auto chi = component_euler();
  auto orient = component_orientable();
  for (int c = 0; c < components_; ++c)
    out += "chi=" + std::to_string(chi[static_cast<size_t>(c)]) +
           " orientable=" + (orient[static_cast<size_t>(c)] ? "true" : "false") + "\n";
  return out;
}

IdentificationComplex build_manifold_complex(const SimplePolytope3& P,
                                             const CharacteristicMap& map) {
  auto check = validate_coloring(P, map);
  if (!check.valid)
    fail(ErrorCode::InvalidColoring, check.violation->describe());

  const int F = P.facet_count();
  const int E = P.edge_count();
  const int V = P.vertex_count();

  IdentificationComplex c;
  c.dimension_ = 3;
  c.top_cells_ = 8;  // G_P is trivial: the 8 polytope copies stay distinct

  // 2-cells: facet copies merge along <color>
  UnionFind uf2(F * 8);
  for (int f = 0; f < F; ++f)
    identify_face_copies(uf2, f, SubgroupZ2({map.color(f)}));
  std::vector<int> class2;
  int n2 = uf2.compress(class2);

  // 1-cells: edge copies merge along the subgroup of the two incident facets
  UnionFind uf1(E * 8);
  for (int e = 0; e < E; ++e) {
    const Edge& ed = P.edges()[static_cast<size_t>(e)];
    identify_face_copies(uf1, e, SubgroupZ2({map.color(ed.facet_a), map.color(ed.facet_b)}));
  }
  std::vector<int> class1;
  int n1 = uf1.compress(class1);

  // 0-cells: vertex copies merge along the full vertex subgroup
  UnionFind uf0(V * 8);
  for (int v = 0; v < V; ++v) {
    const auto& fs = P.vertices()[static_cast<size_t>(v)].facets;
    identify_face_copies(uf0, v,
                         SubgroupZ2({map.color(fs[0]), map.color(fs[1]), map.color(fs[2])}));
  }
  std::vector<int> class0;
  int n0 = uf0.compress(class0);

  c.cell_counts_ = {n0, n1, n2, 8};

  // copy (P,g) meets copy (P, g*color(f)) across facet class (f,g)
  for (int f = 0; f < F; ++f)
    for (int g = 0; g < 8; ++g) {
      int h = g ^ map.color(f).bits();
      if (g < h)
        c.gluings_.push_back({g, h, class2[static_cast<size_t>(f * 8 + g)]});
    }

  c.finish();

  // attribute every cell class to the component of a top cell containing it
  c.class_component_.assign(4, {});
  c.class_component_[3].assign(8, 0);
  for (int g = 0; g < 8; ++g)
    c.class_component_[3][static_cast<size_t>(g)] = c.component_of_top_[static_cast<size_t>(g)];
  c.class_component_[2].assign(static_cast<size_t>(n2), -1);
  for (int f = 0; f < F; ++f)
    for (int g = 0; g < 8; ++g)
      c.class_component_[2][static_cast<size_t>(class2[static_cast<size_t>(f * 8 + g)])] =
          c.component_of_top_[static_cast<size_t>(g)];
  c.class_component_[1].assign(static_cast<size_t>(n1), -1);
  for (int e = 0; e < E; ++e)
    for (int g = 0; g < 8; ++g)
      c.class_component_[1][static_cast<size_t>(class1[static_cast<size_t>(e * 8 + g)])] =
          c.component_of_top_[static_cast<size_t>(g)];
  c.class_component_[0].assign(static_cast<size_t>(n0), -1);
  for (int v = 0; v < V; ++v)
    for (int g = 0; g < 8; ++g)
      c.class_component_[0][static_cast<size_t>(class0[static_cast<size_t>(v * 8 + g)])] =
          c.component_of_top_[static_cast<size_t>(g)];

  return c;
}

IdentificationComplex build_section_surface(const std::array<Z2Vec, 4>& edge_colors) {
  for (int i = 0; i < 4; ++i) {
    if (edge_colors[static_cast<size_t>(i)].is_identity())
      fail(ErrorCode::InvalidColoring, "section edge color is zero");
    if (edge_colors[static_cast<size_t>(i)] == edge_colors[static_cast<size_t>((i + 1) % 4)])
      fail(ErrorCode::InvalidColoring, "adjacent section edges share a color");
  }

  IdentificationComplex c;
  c.dimension_ = 2;
  c.top_cells_ = 8;  // 8 copies of the square

  // 1-cells: (f_i, g) ~ (f_i, g*c_i)
  UnionFind uf1(4 * 8);
  for (int i = 0; i < 4; ++i)
    identify_face_copies(uf1, i, SubgroupZ2({edge_colors[static_cast<size_t>(i)]}));
  std::vector<int> class1;
  int n1 = uf1.compress(class1);

  // 0-cells: corner i lies between edges i and i+1
  UnionFind uf0(4 * 8);
  for (int i = 0; i < 4; ++i)
    identify_face_copies(uf0, i,
                         SubgroupZ2({edge_colors[static_cast<size_t>(i)],
                                     edge_colors[static_cast<size_t>((i + 1) % 4)]}));
  std::vector<int> class0;
  int n0 = uf0.compress(class0);

  c.cell_counts_ = {n0, n1, 8};

  for (int i = 0; i < 4; ++i)
    for (int g = 0; g < 8; ++g) {
      int h = g ^ edge_colors[static_cast<size_t>(i)].bits();
      if (g < h)
        c.gluings_.push_back({g, h, class1[static_cast<size_t>(i * 8 + g)]});
    }

  c.finish();

  c.class_component_.assign(3, {});
  c.class_component_[2].assign(8, 0);
  for (int g = 0; g < 8; ++g)
    c.class_component_[2][static_cast<size_t>(g)] = c.component_of_top_[static_cast<size_t>(g)];
  c.class_component_[1].assign(static_cast<size_t>(n1), -1);
  for (int i = 0; i < 4; ++i)
    for (int g = 0; g < 8; ++g)
      c.class_component_[1][static_cast<size_t>(class1[static_cast<size_t>(i * 8 + g)])] =
          c.component_of_top_[static_cast<size_t>(g)];
  c.class_component_[0].assign(static_cast<size_t>(n0), -1);
  for (int i = 0; i < 4; ++i)
    for (int g = 0; g < 8; ++g)
      c.class_component_[0][static_cast<size_t>(class0[static_cast<size_t>(i * 8 + g)])] =
          c.component_of_top_[static_cast<size_t>(g)];

  return c;
}

IdentificationComplex build_section_surface(const Belt& belt, const CharacteristicMap& map) {
  return build_section_surface(belt_restriction(map, belt));
}

std::string surface_name(int chi, bool orientable) {
  if (orientable) {
    if (chi == 2) return "sphere";
    if (chi == 0) return "torus";
    if (chi % 2 == 0 && chi < 0)
      return "orientable genus-" + std::to_string((2 - chi) / 2) + " surface";
  } else {
    if (chi == 1) return "projective plane";
    if (chi == 0) return "Klein bottle";
    if (chi < 1)
      return "non-orientable genus-" + std::to_string(2 - chi) + " surface";
  }
  return "not a closed surface (chi=" + std::to_string(chi) + ")";
}

SurfaceReport surface_report(const IdentificationComplex& c) {
  if (c.dimension() != 2)
    fail(ErrorCode::NotClosedSurface, "surface_report needs a 2-dimensional complex");
  SurfaceReport report;
  report.components = c.component_count();
  auto chi = c.component_euler();
  auto orient = c.component_orientable();
  for (int i = 0; i < report.components; ++i) {
    int x = chi[static_cast<size_t>(i)];
    bool o = orient[static_cast<size_t>(i)];
    report.per_component.push_back({x, o, surface_name(x, o)});
  }
  return report;
}

bool complex_orientable(const IdentificationComplex& c) {
  if (c.dimension() != 3)
    fail(ErrorCode::NotClosedManifold, "complex_orientable needs a 3-dimensional complex");
  return c.orientable();
}

}  // namespace smallcover
