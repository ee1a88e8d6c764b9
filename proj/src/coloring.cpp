#include "smallcover/coloring.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace smallcover {

CharacteristicMap::CharacteristicMap(std::vector<Z2Vec> assignment)
    : colors_(std::move(assignment)) {
  for (size_t f = 0; f < colors_.size(); ++f)
    if (colors_[f].is_identity())
      fail(ErrorCode::InvalidColoring,
           "facet " + std::to_string(f) + " is assigned the zero vector");
}

Z2Vec CharacteristicMap::color(int facet) const {
  if (facet < 0 || facet >= facet_count())
    fail(ErrorCode::MissingFacet, "no color for facet " + std::to_string(facet));
  return colors_[static_cast<size_t>(facet)];
}

std::string ColoringViolation::describe() const {
  return "vertex " + std::to_string(vertex) + " sees dependent colors " +
         colors[0].to_string() + "," + colors[1].to_string() + "," + colors[2].to_string();
}

ColoringCheck validate_coloring(const SimplePolytope3& P, const CharacteristicMap& map) {
  if (map.facet_count() != P.facet_count())
    fail(ErrorCode::MissingFacet,
         "coloring assigns " + std::to_string(map.facet_count()) + " facets, polytope has " +
             std::to_string(P.facet_count()));
  for (const auto& vi : P.vertices()) {
    Z2Vec a = map.color(vi.facets[0]);
    Z2Vec b = map.color(vi.facets[1]);
    Z2Vec c = map.color(vi.facets[2]);
    if (!independent_triple(a, b, c))
      return {false, ColoringViolation{vi.id, vi.facets, {a, b, c}}};
  }
  return {true, std::nullopt};
}

namespace {

std::vector<Z2Vec> canonical_under_basis(const std::vector<Z2Vec>& colors) {
  std::vector<Z2Vec> best = colors;
  std::vector<Z2Vec> cand(colors.size());
  for (const auto& m : LinearMapZ2::all_invertible()) {
    for (size_t i = 0; i < colors.size(); ++i) cand[i] = m.apply(colors[i]);
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace

std::vector<CharacteristicMap> enumerate_colorings(const SimplePolytope3& P,
                                                   EnumerationOptions options) {
  const int F = P.facet_count();
  if (F > options.max_facets)
    fail(ErrorCode::TooLarge, "enumeration guard: " + std::to_string(F) + " facets > " +
                                  std::to_string(options.max_facets) +
                                  " (raise max_facets to override)");

  // vertices become checkable once their highest-indexed facet is colored
  std::vector<std::vector<const VertexInfo*>> complete_at(static_cast<size_t>(F));
  for (const auto& vi : P.vertices())
    complete_at[static_cast<size_t>(vi.facets[2])].push_back(&vi);

  std::vector<Z2Vec> assignment(static_cast<size_t>(F));
  std::vector<CharacteristicMap> out;
  std::set<std::vector<Z2Vec>> orbit_reps;

  auto backtrack = [&](auto&& self, int f) -> void {
    if (f == F) {
      if (options.up_to_basis) {
        auto rep = canonical_under_basis(assignment);
        if (orbit_reps.insert(rep).second) out.emplace_back(std::move(rep));
      } else {
        out.emplace_back(assignment);
      }
      return;
    }
    for (unsigned bits = 1; bits < 8; ++bits) {
      assignment[static_cast<size_t>(f)] = Z2Vec(bits);
      bool ok = true;
      for (const VertexInfo* vi : complete_at[static_cast<size_t>(f)]) {
        if (!independent_triple(assignment[static_cast<size_t>(vi->facets[0])],
                                assignment[static_cast<size_t>(vi->facets[1])],
                                assignment[static_cast<size_t>(vi->facets[2])])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, f + 1);
    }
  };
  backtrack(backtrack, 0);

  std::sort(out.begin(), out.end());
  return out;
}

bool is_orientable(const CharacteristicMap& map) {
  for (unsigned functional = 1; functional < 8; ++functional) {
    bool all_odd = true;
    for (Z2Vec c : map.colors())
      if (std::popcount(static_cast<unsigned>(functional & c.bits())) % 2 == 0) {
        all_odd = false;
        break;
      }
    if (all_odd) return true;
  }
  return false;
}

SubgroupZ2 face_subgroup(const SimplePolytope3& P, const CharacteristicMap& map,
                         const FaceRef& face) {
  face.validate(P);
  std::vector<Z2Vec> gens;
  for (int f : face.facet_ids) gens.push_back(map.color(f));
  return SubgroupZ2(gens);
}

const char* surface_kind_name(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::TwoTori: return "two tori";
    case SurfaceKind::TwoKleinBottles: return "two Klein bottles";
    case SurfaceKind::Torus: return "torus";
    case SurfaceKind::KleinBottle: return "Klein bottle";
  }
  return "?";
}

const std::array<SectionClass, 5>& section_classes() {
  static const std::array<SectionClass, 5> classes = {{
      {1, {e1, e2, e1, e2}, SurfaceKind::TwoTori, 2},
      {2, {e1, e2, e1, e1 * e2}, SurfaceKind::TwoKleinBottles, 2},
      {3, {e1, e2, e3, e2}, SurfaceKind::Torus, 3},
      {4, {e1, e2, e3, e1 * e2}, SurfaceKind::KleinBottle, 3},
      {5, {e1, e2, e3, e1 * e2 * e3}, SurfaceKind::Torus, 3},
  }};
  return classes;
}

std::array<Z2Vec, 4> canonical_section_tuple(const std::array<Z2Vec, 4>& tuple) {
  std::array<Z2Vec, 4> best = tuple;
  std::array<Z2Vec, 4> rearranged, cand;
  for (int dir = 0; dir < 2; ++dir) {
    for (int r = 0; r < 4; ++r) {
      for (int i = 0; i < 4; ++i) {
        int idx = dir == 0 ? (r + i) % 4 : (r + 4 - i) % 4;
        rearranged[static_cast<size_t>(i)] = tuple[static_cast<size_t>(idx)];
      }
      for (const auto& m : LinearMapZ2::all_invertible()) {
        for (int i = 0; i < 4; ++i)
          cand[static_cast<size_t>(i)] = m.apply(rearranged[static_cast<size_t>(i)]);
        if (cand < best) best = cand;
      }
    }
  }
  return best;
}

namespace {

const std::array<std::array<Z2Vec, 4>, 5>& canonical_forms_of_classes() {
  static const std::array<std::array<Z2Vec, 4>, 5> forms = [] {
    std::array<std::array<Z2Vec, 4>, 5> out{};
    for (size_t i = 0; i < 5; ++i)
      out[i] = canonical_section_tuple(section_classes()[i].tuple);
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = i + 1; j < 5; ++j)
        if (out[i] == out[j])
          fail(ErrorCode::InternalInvariant, "section class orbits are not distinct");
    return out;
  }();
  return forms;
}

int span_rank(const std::array<Z2Vec, 4>& tuple) {
  SubgroupZ2 span(std::vector<Z2Vec>(tuple.begin(), tuple.end()));
  int order = span.order();
  int rank = 0;
  while ((1 << rank) < order) ++rank;
  return rank;
}

}  // namespace

SectionClass classify_section_tuple(const std::array<Z2Vec, 4>& tuple) {
  for (int i = 0; i < 4; ++i) {
    if (tuple[static_cast<size_t>(i)].is_identity())
      fail(ErrorCode::InvalidColoring, "section tuple contains the zero vector");
    if (tuple[static_cast<size_t>(i)] == tuple[static_cast<size_t>((i + 1) % 4)])
      fail(ErrorCode::InvalidColoring, "adjacent belt facets share a color");
  }
  auto canon = canonical_section_tuple(tuple);
  const auto& forms = canonical_forms_of_classes();
  for (size_t i = 0; i < 5; ++i)
    if (forms[i] == canon) {
      SectionClass cls = section_classes()[i];
      if (cls.rank != span_rank(tuple))
        fail(ErrorCode::InternalInvariant, "section rank disagrees with its class");
      return cls;
    }
  fail(ErrorCode::UnclassifiableSection,
       "valid restriction matches none of the five classes (internal bug)");
}

std::array<Z2Vec, 4> belt_restriction(const CharacteristicMap& map, const Belt& belt) {
  if (belt.length() != 4)
    fail(ErrorCode::NotAFourBelt, "section classification needs a 4-belt");
  std::array<Z2Vec, 4> r;
  for (int i = 0; i < 4; ++i)
    r[static_cast<size_t>(i)] = map.color(belt.facet_cycle()[static_cast<size_t>(i)]);
  return r;
}

SectionClass classify_belt_section(const CharacteristicMap& map, const Belt& belt) {
  return classify_section_tuple(belt_restriction(map, belt));
}

SectionMatch match_belt_section(const CharacteristicMap& map, const Belt& belt) {
  auto restriction = belt_restriction(map, belt);
  SectionClass cls = classify_section_tuple(restriction);

  // find a dihedral move d and basis change M with restriction(d) = M(tuple)
  for (int dir = 0; dir < 2; ++dir) {
    for (int r = 0; r < 4; ++r) {
      std::array<int, 4> aligned_facets;
      std::array<Z2Vec, 4> aligned;
      for (int i = 0; i < 4; ++i) {
        int idx = dir == 0 ? (r + i) % 4 : (r + 4 - i) % 4;
        aligned_facets[static_cast<size_t>(i)] =
            belt.facet_cycle()[static_cast<size_t>(idx)];
        aligned[static_cast<size_t>(i)] = restriction[static_cast<size_t>(idx)];
      }
      for (const auto& m : LinearMapZ2::all_invertible()) {
        bool match = true;
        for (int i = 0; i < 4 && match; ++i)
          match = m.apply(cls.tuple[static_cast<size_t>(i)]) == aligned[static_cast<size_t>(i)];
        if (match) return SectionMatch{cls, aligned_facets, aligned, m};
      }
    }
  }
  fail(ErrorCode::InternalInvariant, "classified section admits no alignment witness");
}

}  // namespace smallcover
