#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "smallcover/coloring.hpp"
#include "smallcover/json_io.hpp"

using namespace smallcover;

namespace {

// cube facets: 0 bottom, 1 top, 2 front, 3 right, 4 back, 5 left
CharacteristicMap cube_opposite_pairs() {
  return CharacteristicMap({e3, e3, e1, e2, e1, e2});
}

CharacteristicMap prism5_nonorientable() {
  // sides get (e1,e2,e1,e2,e1e2), top and bottom e3
  return CharacteristicMap({e3, e3, e1, e2, e1, e2, e1 * e2});
}

}  // namespace

TEST_CASE("validate_coloring") {
  auto cube = SimplePolytope3::builtin("cube");
  CHECK(validate_coloring(cube, cube_opposite_pairs()).valid);

  // corner seeing e1, e2, e1e2
  CharacteristicMap bad({e1, e1, e2, e2, e3, e1 * e2});
  auto check = validate_coloring(cube, bad);
  CHECK_FALSE(check.valid);
  REQUIRE(check.violation.has_value());

  auto simplex = SimplePolytope3::builtin("simplex");
  CHECK(validate_coloring(simplex, CharacteristicMap({e1, e2, e3, e1 * e2 * e3})).valid);

  CHECK_THROWS_AS(CharacteristicMap({e1, Z2Vec(0), e2, e3}), Error);
  CHECK_THROWS_AS(validate_coloring(cube, CharacteristicMap({e1, e2, e3})), Error);
}

TEST_CASE("simplex colorings: 168 raw, 1 orbit") {
  auto simplex = SimplePolytope3::builtin("simplex");
  auto raw = enumerate_colorings(simplex);
  CHECK(raw.size() == 168);

  // against the full 7^4 scan
  auto scan = oracles::brute_force_colorings(simplex);
  REQUIRE(raw.size() == scan.size());
  CHECK(std::equal(raw.begin(), raw.end(), scan.begin()));

  EnumerationOptions orbit;
  orbit.up_to_basis = true;
  auto reps = enumerate_colorings(simplex, orbit);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0] == CharacteristicMap({e1, e2, e3, e1 * e2 * e3}));
}

TEST_CASE("cube colorings match the 7^6 scan exactly") {
  auto cube = SimplePolytope3::builtin("cube");
  auto fast = enumerate_colorings(cube);
  auto scan = oracles::brute_force_colorings(cube);
  REQUIRE(fast.size() == scan.size());
  CHECK(std::equal(fast.begin(), fast.end(), scan.begin()));
}

TEST_CASE("enumeration guard") {
  auto dodec = SimplePolytope3::builtin("dodecahedron");
  EnumerationOptions tight;
  tight.max_facets = 10;
  CHECK_THROWS_AS(enumerate_colorings(dodec, tight), Error);
}

TEST_CASE("is_orientable") {
  CHECK(is_orientable(cube_opposite_pairs()));
  CHECK(is_orientable(CharacteristicMap({e1, e2, e3, e1 * e2 * e3})));
  CHECK_FALSE(is_orientable(prism5_nonorientable()));
}

TEST_CASE("face subgroups have the expected orders") {
  auto cube = SimplePolytope3::builtin("cube");
  auto map = cube_opposite_pairs();
  CHECK(face_subgroup(cube, map, FaceRef::whole_polytope()).order() == 1);
  CHECK(face_subgroup(cube, map, FaceRef::facet(0)).order() == 2);
  CHECK(face_subgroup(cube, map, FaceRef::edge(0, 2)).order() == 4);
  for (const auto& vi : cube.vertices())
    CHECK(face_subgroup(cube, map,
                        FaceRef::vertex(vi.facets[0], vi.facets[1], vi.facets[2]))
              .order() == 8);
}

TEST_CASE("the five section classes and their canonical tuples") {
  const auto& classes = section_classes();
  CHECK(classes[0].surface == SurfaceKind::TwoTori);
  CHECK(classes[1].surface == SurfaceKind::TwoKleinBottles);
  CHECK(classes[2].surface == SurfaceKind::Torus);
  CHECK(classes[3].surface == SurfaceKind::KleinBottle);
  CHECK(classes[4].surface == SurfaceKind::Torus);
  for (const auto& cls : classes)
    CHECK(classify_section_tuple(cls.tuple).case_index == cls.case_index);
}

TEST_CASE("classify_section_tuple on spec'd restrictions") {
  CHECK(classify_section_tuple({e1, e2, e1, e2}).surface == SurfaceKind::TwoTori);
  CHECK(classify_section_tuple({e1, e2, e1, e1 * e2}).surface == SurfaceKind::TwoKleinBottles);
  CHECK(classify_section_tuple({e1, e2, e3, e1 * e2 * e3}).surface == SurfaceKind::Torus);
  // rotated/relabeled case-2 tuple
  CHECK(classify_section_tuple({e2, e1 * e2, e2, e1}).surface == SurfaceKind::TwoKleinBottles);
}

TEST_CASE("every adjacent-distinct tuple lands in exactly one of the five classes") {
  int per_case[6] = {0, 0, 0, 0, 0, 0};
  for (unsigned a = 1; a < 8; ++a)
    for (unsigned b = 1; b < 8; ++b)
      for (unsigned c = 1; c < 8; ++c)
        for (unsigned d = 1; d < 8; ++d) {
          if (a == b || b == c || c == d || d == a) continue;
          auto cls = classify_section_tuple({Z2Vec(a), Z2Vec(b), Z2Vec(c), Z2Vec(d)});
          ++per_case[cls.case_index];
          // rank 2 exactly for the first two classes
          SubgroupZ2 span({Z2Vec(a), Z2Vec(b), Z2Vec(c), Z2Vec(d)});
          CHECK((span.order() == 4) == (cls.case_index <= 2));
        }
  for (int i = 1; i <= 5; ++i) CHECK(per_case[i] > 0);
}

TEST_CASE("classification is invariant under basis changes and dihedral moves") {
  std::mt19937 rng(20240801);
  std::uniform_int_distribution<int> bits(1, 7);
  const auto& maps = LinearMapZ2::all_invertible();
  std::uniform_int_distribution<size_t> pick_map(0, maps.size() - 1);
  std::uniform_int_distribution<int> pick_rot(0, 3);
  std::uniform_int_distribution<int> pick_dir(0, 1);

  for (int trial = 0; trial < 500; ++trial) {
    std::array<Z2Vec, 4> tuple;
    do {
      for (auto& t : tuple) t = Z2Vec(static_cast<unsigned>(bits(rng)));
    } while (tuple[0] == tuple[1] || tuple[1] == tuple[2] || tuple[2] == tuple[3] ||
             tuple[3] == tuple[0]);

    auto base = classify_section_tuple(tuple);

    const auto& m = maps[pick_map(rng)];
    int rot = pick_rot(rng), dir = pick_dir(rng);
    std::array<Z2Vec, 4> moved;
    for (int i = 0; i < 4; ++i) {
      int idx = dir == 0 ? (rot + i) % 4 : (rot + 4 - i) % 4;
      moved[static_cast<size_t>(i)] = m.apply(tuple[static_cast<size_t>(idx)]);
    }
    CHECK(classify_section_tuple(moved).case_index == base.case_index);
  }
}

TEST_CASE("belt restriction classification and alignment witness") {
  auto cube = SimplePolytope3::builtin("cube");
  auto map = cube_opposite_pairs();
  for (const Belt& belt : find_belts(cube, 4)) {
    auto match = match_belt_section(map, belt);
    CHECK(match.cls.case_index == 1);  // opposite-pair coloring: (x,y,x,y) on every belt
    for (int i = 0; i < 4; ++i) {
      CHECK(match.basis_to_actual.apply(match.cls.tuple[static_cast<size_t>(i)]) ==
            match.restriction[static_cast<size_t>(i)]);
      CHECK(map.color(match.aligned_cycle[static_cast<size_t>(i)]) ==
            match.restriction[static_cast<size_t>(i)]);
    }
  }
}

TEST_CASE("coloring JSON round-trip") {
  auto map = cube_opposite_pairs();
  auto back = parse_coloring(serialize_coloring(map), map.facet_count());
  CHECK(back == map);
  CHECK_THROWS_AS(parse_coloring(R"({"colors":{"0":[1,0,0]}})", 6), Error);
  CHECK_THROWS_AS(parse_coloring(R"({"colors":{"0":[2,0,0]}})", 1), Error);
}
