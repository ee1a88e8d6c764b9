#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "smallcover/json_io.hpp"
#include "smallcover/polytope.hpp"

using namespace smallcover;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalInvariant;
}

}  // namespace

TEST_CASE("tetrahedron document parses with the expected counts") {
  auto P = parse_polytope(R"({"name":"tet","facets":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]})");
  CHECK(P.vertex_count() == 4);
  CHECK(P.edge_count() == 6);
  CHECK(P.facet_count() == 4);
  CHECK(P.is_simplex());
}

TEST_CASE("cube document parses with the expected counts") {
  auto cube = SimplePolytope3::builtin("cube");
  auto P = parse_polytope(serialize_polytope(cube));
  CHECK(P.vertex_count() == 8);
  CHECK(P.edge_count() == 12);
  CHECK(P.facet_count() == 6);
  CHECK_FALSE(P.is_simplex());
}

TEST_CASE("duplicated facet is rejected") {
  auto build = [] {
    parse_polytope(
        R"({"facets":[[0,1,2,3],[4,7,6,5],[0,4,5,1],[1,5,6,2],[2,6,7,3],[2,6,7,3]]})");
  };
  CHECK(code_of(build) == ErrorCode::DuplicateFacet);
}

TEST_CASE("validation failures carry the right codes") {
  // cube with its bottom facet cycle scrambled: vertex incidences survive but
  // the bottom edges no longer match the side edges
  CHECK(code_of([] {
          parse_polytope(
              R"({"facets":[[0,2,1,3],[4,7,6,5],[0,4,5,1],[1,5,6,2],[2,6,7,3],[3,7,4,0]]})");
        }) == ErrorCode::NotClosed);
  // cube with a triangular bottom: vertex 3 lies in only two facets
  CHECK(code_of([] {
          parse_polytope(
              R"({"facets":[[0,1,2],[4,7,6,5],[0,4,5,1],[1,5,6,2],[2,6,7,3],[3,7,4,0]]})");
        }) == ErrorCode::NotSimple);
  // two disjoint tetrahedra: every local condition holds, Euler count is 4
  CHECK(code_of([] {
          parse_polytope(
              R"({"facets":[[0,1,2],[0,1,3],[0,2,3],[1,2,3],
                            [4,5,6],[4,5,7],[4,6,7],[5,6,7]]})");
        }) == ErrorCode::EulerViolation);
  CHECK(code_of([] { parse_polytope(R"({"facets": [[0,1,2]]})"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_polytope(R"("not an object")"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { parse_polytope(R"({"facets":[[0,1,1],[0,1,3],[0,2,3],[1,2,3]]})"); }) ==
        ErrorCode::SchemaError);  // repeated vertex inside one cycle
}

TEST_CASE("builtins have the documented combinatorics") {
  auto simplex = SimplePolytope3::builtin("simplex");
  CHECK(simplex.facet_count() == 4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) CHECK(simplex.adjacent(a, b));

  auto prism5 = SimplePolytope3::builtin("prism", 5);
  CHECK(prism5.facet_count() == 7);
  CHECK(prism5.vertex_count() == 10);
  CHECK(prism5.edge_count() == 15);

  auto dodec = SimplePolytope3::builtin("dodecahedron");
  CHECK(dodec.facet_count() == 12);
  CHECK(dodec.vertex_count() == 20);
  CHECK(dodec.edge_count() == 30);
  for (const auto& facet : dodec.facets()) CHECK(facet.size() == 5);

  CHECK(code_of([] { SimplePolytope3::builtin("icosahedron"); }) == ErrorCode::UnknownBuiltin);
  CHECK(code_of([] { SimplePolytope3::builtin("prism", 2); }) == ErrorCode::BadParameter);
}

TEST_CASE("facets_common_vertex") {
  auto simplex = SimplePolytope3::builtin("simplex");
  CHECK(simplex.common_vertex(0, 1, 2).has_value());

  auto cube = SimplePolytope3::builtin("cube");
  CHECK_FALSE(cube.common_vertex(0, 1, 2).has_value());  // bottom, top, side

  auto prism5 = SimplePolytope3::builtin("prism", 5);
  // sides 2 and 3 share the vertical edge at vertex 1; with the top they meet
  // at its upper endpoint
  auto v = prism5.common_vertex(2, 3, 1);
  REQUIRE(v.has_value());
  CHECK(*v == 6);
  CHECK(code_of([&] { prism5.common_vertex(2, 2, 1); }) == ErrorCode::BadFacetId);
}

TEST_CASE("incidence sums: facet sizes add to 2E and 3V") {
  for (const char* name : {"simplex", "cube", "dodecahedron"}) {
    auto P = SimplePolytope3::builtin(name);
    size_t total = 0;
    for (const auto& facet : P.facets()) total += facet.size();
    CHECK(total == 2 * static_cast<size_t>(P.edge_count()));
    CHECK(total == 3 * static_cast<size_t>(P.vertex_count()));
    for (int f = 0; f < P.facet_count(); ++f)
      CHECK(P.adjacent_facets(f).size() == P.facets()[static_cast<size_t>(f)].size());
  }
}

TEST_CASE("serialize/parse round-trip preserves the combinatorics") {
  for (int k = 3; k <= 8; ++k) {
    auto P = SimplePolytope3::builtin("prism", k);
    auto Q = parse_polytope(serialize_polytope(P));
    CHECK(P.vertex_count() == Q.vertex_count());
    CHECK(P.edge_count() == Q.edge_count());
    CHECK(P.facet_count() == Q.facet_count());
    // facet vertex sets agree up to order
    std::set<std::set<int>> a, b;
    for (const auto& f : P.facets()) a.insert(std::set<int>(f.begin(), f.end()));
    for (const auto& f : Q.facets()) b.insert(std::set<int>(f.begin(), f.end()));
    CHECK(a == b);
    // serialization is a fixpoint
    CHECK(serialize_polytope(Q) == serialize_polytope(parse_polytope(serialize_polytope(Q))));
  }
}

TEST_CASE("FaceRef validation") {
  auto cube = SimplePolytope3::builtin("cube");
  CHECK_NOTHROW(FaceRef::whole_polytope().validate(cube));
  CHECK_NOTHROW(FaceRef::facet(3).validate(cube));
  CHECK_NOTHROW(FaceRef::edge(0, 2).validate(cube));
  CHECK(code_of([&] { FaceRef::edge(0, 1).validate(cube); }) == ErrorCode::BadFace);
  CHECK_NOTHROW(FaceRef::vertex(0, 2, 3).validate(cube));
  CHECK(code_of([&] { FaceRef::vertex(0, 1, 2).validate(cube); }) == ErrorCode::BadFace);
}
