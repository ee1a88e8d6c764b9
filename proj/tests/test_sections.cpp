// Cross-validation of the coloring classes against the independently built
// section surfaces, plus diagram checks over colorings that exercise all
// five classes.

#include <doctest.h>

#include <set>

#include "smallcover/complex.hpp"
#include "smallcover/racg.hpp"

using namespace smallcover;

namespace {

struct NamedColoring {
  SimplePolytope3 P;
  CharacteristicMap map;
};

// chosen so the corpus belts hit all five classes
std::vector<NamedColoring> section_corpus() {
  std::vector<NamedColoring> out;
  out.push_back({SimplePolytope3::builtin("cube"),
                 CharacteristicMap({e3, e3, e1, e2, e1, e2})});  // class 1
  out.push_back({SimplePolytope3::builtin("cube"),
                 CharacteristicMap({e1 * e3, e1 * e3, e1, e2, e3, e1 * e2 * e3})});  // 2 and 5
  out.push_back({SimplePolytope3::builtin("cube"),
                 CharacteristicMap({e1 * e3, e1 * e3, e1, e2, e3, e1 * e2})});  // 2, 3 and 4
  out.push_back({SimplePolytope3::builtin("prism", 5),
                 CharacteristicMap({e3, e3, e1, e2, e1, e2, e1 * e2})});  // 1 and 3
  return out;
}

int expected_components(SurfaceKind kind) {
  return (kind == SurfaceKind::TwoTori || kind == SurfaceKind::TwoKleinBottles) ? 2 : 1;
}

bool expected_orientable(SurfaceKind kind) {
  return kind == SurfaceKind::TwoTori || kind == SurfaceKind::Torus;
}

}  // namespace

TEST_CASE("all five classes appear in the section corpus") {
  std::set<int> seen;
  for (const auto& c : section_corpus()) {
    REQUIRE(validate_coloring(c.P, c.map).valid);
    for (const Belt& belt : find_belts(c.P, 4))
      seen.insert(classify_belt_section(c.map, belt).case_index);
  }
  CHECK(seen == std::set<int>{1, 2, 3, 4, 5});
}

TEST_CASE("surface oracle confirms every classified section") {
  for (const auto& c : section_corpus()) {
    for (const Belt& belt : find_belts(c.P, 4)) {
      auto cls = classify_belt_section(c.map, belt);
      auto report = surface_report(build_section_surface(belt, c.map));
      CAPTURE(c.P.name());
      CAPTURE(cls.case_index);
      CHECK(report.components == expected_components(cls.surface));
      for (const auto& comp : report.per_component) {
        CHECK(comp.euler_characteristic == 0);
        CHECK(comp.orientable == expected_orientable(cls.surface));
      }
    }
  }
}

TEST_CASE("diagram commutation across all five classes") {
  // The square-side lift is verified exact; the manifold-side lift is a
  // reconstruction. Under it the rank-2 classes commute outright and class 3
  // commutes once the construction choices (belt alignment, base endpoint)
  // are made as in the figure. Classes 4 and 5 do not commute under the
  // printed inclusion formula for any choice; the check reports the
  // witnesses rather than forcing them. These expectations pin the observed
  // behavior so any change is surfaced.
  for (const auto& c : section_corpus()) {
    for (const Belt& belt : find_belts(c.P, 4)) {
      auto cls = classify_belt_section(c.map, belt);
      auto report = racg::check_diagram_commutation(c.P, c.map, belt);
      CAPTURE(c.P.name());
      CAPTURE(cls.case_index);
      CHECK(report.checked > 0);
      if (cls.case_index <= 2) {
        for (const auto& failure : report.failures) CAPTURE(failure);
        CHECK(report.ok());
      } else if (cls.case_index == 3) {
        CHECK(report.commutes_under_some_choice);
      } else {
        CHECK_FALSE(report.commutes_under_some_choice);
        CHECK_FALSE(report.failures.empty());
      }
    }
  }
}

TEST_CASE("psi lifts are kernel elements for every corpus belt") {
  for (const auto& c : section_corpus()) {
    auto WF = racg::Presentation::square();
    for (const Belt& belt : find_belts(c.P, 4)) {
      auto match = match_belt_section(c.map, belt);
      std::vector<Z2Vec> colors(match.cls.tuple.begin(), match.cls.tuple.end());
      unsigned domain = match.cls.rank == 2 ? 4 : 8;
      for (int i = 1; i <= 4; ++i)
        for (unsigned bits = 0; bits < domain; ++bits) {
          auto s = racg::psi_generator(match.cls, i, Z2Vec(bits));
          CHECK(racg::phi(colors, s).is_identity());
        }
    }
  }
}
