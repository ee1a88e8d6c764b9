#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "smallcover/belts.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/z2.hpp"

namespace smallcover {

/// Characteristic map: nonzero Z_2^3 vector per facet, with the three values
/// at every vertex linearly independent.
class CharacteristicMap {
 public:
  explicit CharacteristicMap(std::vector<Z2Vec> assignment);

  int facet_count() const { return static_cast<int>(colors_.size()); }
  Z2Vec color(int facet) const;
  const std::vector<Z2Vec>& colors() const { return colors_; }

  friend bool operator==(const CharacteristicMap& a, const CharacteristicMap& b) {
    return a.colors_ == b.colors_;
  }
  friend bool operator<(const CharacteristicMap& a, const CharacteristicMap& b) {
    return a.colors_ < b.colors_;
  }

 private:
  std::vector<Z2Vec> colors_;
};

struct ColoringViolation {
  int vertex;                   // offending vertex id
  std::array<int, 3> facets;    // its incident facets
  std::array<Z2Vec, 3> colors;  // the dependent triple
  std::string describe() const;
};

/// True iff the vertex-independence invariant holds everywhere; otherwise the
/// first violating vertex (in id order) is reported.
struct ColoringCheck {
  bool valid;
  std::optional<ColoringViolation> violation;
};
ColoringCheck validate_coloring(const SimplePolytope3& P, const CharacteristicMap& map);

struct EnumerationOptions {
  bool up_to_basis = false;
  int max_facets = 16;  // guard for the backtracking search
};

/// Exhaustive backtracking over nonzero colors under vertex-independence.
/// With up_to_basis, one representative per orbit of the 168 basis changes
/// acting on values (representative = lexicographically least image
/// sequence). Deterministic sorted output.
std::vector<CharacteristicMap> enumerate_colorings(const SimplePolytope3& P,
                                                   EnumerationOptions options = {});

/// Orientability by the linear-functional criterion: true iff some nonzero
/// functional takes value 1 on every facet color.
bool is_orientable(const CharacteristicMap& map);

/// Subgroup generated by the colors of the facets containing the face.
SubgroupZ2 face_subgroup(const SimplePolytope3& P, const CharacteristicMap& map,
                         const FaceRef& face);

enum class SurfaceKind { TwoTori, TwoKleinBottles, Torus, KleinBottle };

const char* surface_kind_name(SurfaceKind kind);

/// One of the five coloring classes a 4-belt restriction can fall into, up to
/// basis changes of Z_2^3 and dihedral symmetries of the 4-cycle.
struct SectionClass {
  int case_index;                 // 1..5
  std::array<Z2Vec, 4> tuple;     // canonical representative tuple
  SurfaceKind surface;
  int rank;                       // of the span of the tuple: 2 or 3

  friend bool operator==(const SectionClass& a, const SectionClass& b) {
    return a.case_index == b.case_index;
  }
};

/// The five classes in the fixed order: (e1,e2,e1,e2), (e1,e2,e1,e1e2),
/// (e1,e2,e3,e2), (e1,e2,e3,e1e2), (e1,e2,e3,e1e2e3).
const std::array<SectionClass, 5>& section_classes();

/// Lexicographically least image of the tuple over all 168 basis changes
/// combined with the 8 dihedral symmetries of the 4-cycle.
std::array<Z2Vec, 4> canonical_section_tuple(const std::array<Z2Vec, 4>& tuple);

/// Classifies the restriction of the coloring to a 4-belt. Any valid
/// restriction lands in one of the five classes; anything else signals an
/// internal bug (UnclassifiableSection).
SectionClass classify_belt_section(const CharacteristicMap& map, const Belt& belt);

/// Classification of a bare 4-tuple (adjacent entries must differ).
SectionClass classify_section_tuple(const std::array<Z2Vec, 4>& tuple);

/// Classification plus the alignment that realizes it: a dihedral transform
/// of the belt and a basis change M with restriction(aligned) = M(canonical).
struct SectionMatch {
  SectionClass cls;
  std::array<int, 4> aligned_cycle;       // belt facets after the dihedral move
  std::array<Z2Vec, 4> restriction;       // colors of the aligned facets
  LinearMapZ2 basis_to_actual;            // canonical basis -> actual colors
};
SectionMatch match_belt_section(const CharacteristicMap& map, const Belt& belt);

/// Restriction of the coloring to the belt facets, in cycle order.
std::array<Z2Vec, 4> belt_restriction(const CharacteristicMap& map, const Belt& belt);

}  // namespace smallcover
