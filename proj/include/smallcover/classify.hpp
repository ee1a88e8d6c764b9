#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smallcover/belts.hpp"
#include "smallcover/coloring.hpp"
#include "smallcover/complex.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/racg.hpp"

namespace smallcover {

/// Boolean verdict that may be marked "excluded" for the 3-simplex, where the
/// supporting statement does not apply.
struct Verdict {
  bool value = false;
  bool excluded = false;
  std::string note;  // set when excluded

  static Verdict yes() { return {true, false, {}}; }
  static Verdict no() { return {false, false, {}}; }
  static Verdict excluded_simplex() { return {false, true, "excluded: P=simplex"}; }
};

struct SectionResult {
  Belt belt;
  SectionClass cls;
  SurfaceReport surface;      // from the independently built complex
  bool surface_matches_class; // cross-validation of the five-case list
};

struct ColoringReport {
  CharacteristicMap coloring;
  bool orientable;                 // linear-functional criterion
  bool complex_orientable;         // orientation-propagation oracle
  int euler_characteristic;        // of the 3-complex
  bool z2_witness_verified;        // all witnesses pass (vacuously true if no belts)
  std::vector<SectionResult> sections;
};

struct ClassificationReport {
  std::string name;
  int vertex_count = 0, edge_count = 0, facet_count = 0;
  bool is_simplex = false;
  std::vector<PrismaticCircuit> prismatic_3, prismatic_4;
  std::vector<Belt> belts_4;
  bool flag = false;
  Verdict atoroidal, aspherical, hyperbolic_realizable;
  std::vector<ColoringReport> colorings;
};

enum class ColoringMode { None, First, All };

struct ClassifyOptions {
  ColoringMode mode = ColoringMode::None;
  std::optional<CharacteristicMap> coloring;  // overrides mode when set
  int max_facets = 16;                        // enumeration guard
};

/// Full pipeline: circuits, belts, flagness, the three verdicts, and (per
/// requested coloring) orientability, sections, Euler characteristic and Z^2
/// witnesses. The report invariants are asserted before returning:
///   atoroidal == no 4-belt, aspherical == flag (P != simplex),
///   realizable == no prismatic 3- or 4-circuit (P != simplex),
///   realizable implies atoroidal and aspherical.
ClassificationReport classify(const SimplePolytope3& P, ClassifyOptions options = {});

/// Deterministic JSON encoding with top-level keys polytope, circuits, belts,
/// verdicts, colorings.
std::string report_to_json(const ClassificationReport& report);

struct SuiteAssertion {
  std::string polytope;
  std::string name;
  enum class Status { Pass, Fail, Skipped } status;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteAssertion> assertions;
  bool all_passed() const;
};

/// Per-polytope theorem checks: (a) every 4-belt yields a verified Z^2
/// witness; (b) the induced-4-cycle criterion agrees with belt search;
/// (c) under no prismatic 3-circuit, prismatic 4-circuits exist iff 4-belts
/// exist, and every prismatic 4-circuit determines a 4-belt; (d) flagness
/// matches the absence of prismatic 3-circuits (skipped for the simplex).
SuiteReport run_theorem_suite(const std::vector<SimplePolytope3>& corpus);

/// The default corpus: simplex, cube, prism(3..8), dodecahedron.
std::vector<SimplePolytope3> default_corpus();

}  // namespace smallcover
