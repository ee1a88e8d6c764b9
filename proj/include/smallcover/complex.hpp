#pragma once

#include <array>
#include <string>
#include <vector>

#include "smallcover/coloring.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/z2.hpp"

namespace smallcover {

/// Cell complex obtained from face x group-element pairs glued along the
/// coset identifications of the small-cover construction. Dimension 3 builds
/// the manifold M from 8 copies of P; dimension 2 builds the sectional
/// surface from 8 copies of the belt square.
class IdentificationComplex {
 public:
  int dimension() const { return dimension_; }

  /// Identified cell-class count per dimension (index 0..dimension).
  const std::vector<int>& cell_counts() const { return cell_counts_; }

  /// V - E + F (- cells of dim 3).
  int euler_characteristic() const;

  /// Number of connected components (top cells joined across codim-1 cells).
  int component_count() const;

  /// Component index of each top cell.
  const std::vector<int>& top_cell_component() const { return component_of_top_; }

  /// Whether top-cell orientations can be chosen consistently across every
  /// codim-1 identification. Solved as a parity 2-coloring of the gluing
  /// graph; a copy glued to another by the identity map on a shared face must
  /// take the opposite orientation.
  bool orientable() const;

  /// Per-component orientability, same 2-coloring restricted per component.
  std::vector<bool> component_orientable() const;

  /// Per-component Euler characteristic.
  std::vector<int> component_euler() const;

  /// Plain-text census: cells[d]=<count> lines plus per-component
  /// chi=<int> orientable=<bool> lines.
  std::string dump() const;

 private:
  friend IdentificationComplex build_manifold_complex(const SimplePolytope3&,
                                                      const CharacteristicMap&);
  friend IdentificationComplex build_section_surface(const std::array<Z2Vec, 4>&);

  int dimension_ = 0;
  std::vector<int> cell_counts_;
  int top_cells_ = 0;
  // gluing edges between top cells: (a, b, codim1 class id)
  struct Gluing {
    int top_a, top_b, face_class;
  };
  std::vector<Gluing> gluings_;
  std::vector<int> component_of_top_;
  int components_ = 0;
  // class id -> component, per dimension (for per-component chi)
  std::vector<std::vector<int>> class_component_;

  void finish();  // computes components and checks two-sidedness
};

/// The small cover M = P x Z_2^3 / ~ of Eq-style coset identifications:
/// copies (f,g) and (f,h) merge iff g^-1 h lies in the subgroup generated by
/// the colors of the facets containing f.
IdentificationComplex build_manifold_complex(const SimplePolytope3& P,
                                             const CharacteristicMap& map);

/// The sectional surface over a 4-belt square: 8 square copies, edges
/// (f_i, g) ~ (f_i, g * c_i) for the edge colors c_i, corners merged under
/// the subgroup generated by their two incident edge colors.
IdentificationComplex build_section_surface(const std::array<Z2Vec, 4>& edge_colors);
IdentificationComplex build_section_surface(const Belt& belt, const CharacteristicMap& map);

struct ComponentReport {
  int euler_characteristic;
  bool orientable;
  std::string surface_name;  // classification of the closed surface
};

struct SurfaceReport {
  int components;
  std::vector<ComponentReport> per_component;
};

/// Components, chi and orientability of a closed surface complex.
SurfaceReport surface_report(const IdentificationComplex& c);

/// Orientability of a closed 3-complex by orientation propagation.
bool complex_orientable(const IdentificationComplex& c);

/// Name of the closed surface with the given invariants.
std::string surface_name(int euler_characteristic, bool orientable);

}  // namespace smallcover
