#include "smallcover/classify.hpp"

#include <algorithm>

#include <json.hpp>

namespace smallcover {

using nlohmann::json;

namespace {

ColoringReport analyze_coloring(const SimplePolytope3& P, const CharacteristicMap& map,
                                const std::vector<Belt>& belts) {
  auto check = validate_coloring(P, map);
  if (!check.valid) fail(ErrorCode::InvalidColoring, check.violation->describe());

  ColoringReport report{map, false, false, 0, true, {}};
  report.orientable = is_orientable(map);

  IdentificationComplex M = build_manifold_complex(P, map);
  report.complex_orientable = complex_orientable(M);
  report.euler_characteristic = M.euler_characteristic();

  for (const Belt& belt : belts) {
    SectionClass cls = classify_belt_section(map, belt);
    IdentificationComplex section = build_section_surface(belt, map);
    SurfaceReport surface = surface_report(section);

    bool matches = true;
    int expected_components =
        (cls.surface == SurfaceKind::TwoTori || cls.surface == SurfaceKind::TwoKleinBottles) ? 2
                                                                                             : 1;
    bool expected_orientable =
        cls.surface == SurfaceKind::TwoTori || cls.surface == SurfaceKind::Torus;
    if (surface.components != expected_components) matches = false;
    for (const auto& comp : surface.per_component)
      if (comp.euler_characteristic != 0 || comp.orientable != expected_orientable)
        matches = false;
    if (!matches)
      fail(ErrorCode::InternalInvariant,
           "section surface disagrees with its coloring class on belt of " + P.name());

    racg::Z2WitnessReport witness = racg::z2_witness(P, belt);
    if (!witness.ok()) report.z2_witness_verified = false;

    report.sections.push_back(SectionResult{belt, cls, std::move(surface), matches});
  }
  return report;
}

}  // namespace

ClassificationReport classify(const SimplePolytope3& P, ClassifyOptions options) {
  ClassificationReport report;
  report.name = P.name();
  report.vertex_count = P.vertex_count();
  report.edge_count = P.edge_count();
  report.facet_count = P.facet_count();
  report.is_simplex = P.is_simplex();

  report.prismatic_3 = find_prismatic_circuits(P, 3);
  report.prismatic_4 = find_prismatic_circuits(P, 4);
  report.belts_4 = find_belts(P, 4);
  report.flag = is_flag(P);

  report.atoroidal = report.belts_4.empty() ? Verdict::yes() : Verdict::no();
  if (report.is_simplex) {
    report.aspherical = Verdict::excluded_simplex();
    report.hyperbolic_realizable = Verdict::no();  // pi_1 has torsion
  } else {
    report.aspherical = report.flag ? Verdict::yes() : Verdict::no();
    report.hyperbolic_realizable =
        (report.prismatic_3.empty() && report.prismatic_4.empty()) ? Verdict::yes()
                                                                   : Verdict::no();
  }

  // report invariants, asserted at emission time
  if (report.atoroidal.value != report.belts_4.empty())
    fail(ErrorCode::InternalInvariant, "atoroidal verdict out of sync with belt search");
  if (!report.is_simplex && report.aspherical.value != report.flag)
    fail(ErrorCode::InternalInvariant, "aspherical verdict out of sync with flagness");
  if (report.hyperbolic_realizable.value &&
      !(report.atoroidal.value && (report.aspherical.value || report.aspherical.excluded)))
    fail(ErrorCode::InternalInvariant, "realizable polytope must be atoroidal and aspherical");
  if (report.hyperbolic_realizable.value && report.aspherical.excluded)
    fail(ErrorCode::InternalInvariant, "the simplex cannot be realizable");

  std::vector<CharacteristicMap> maps;
  if (options.coloring) {
    maps.push_back(*options.coloring);
  } else if (options.mode != ColoringMode::None) {
    EnumerationOptions enum_options;
    enum_options.max_facets = options.max_facets;
    auto all = enumerate_colorings(P, enum_options);
    if (options.mode == ColoringMode::First && !all.empty())
      maps.push_back(all.front());
    else
      maps = std::move(all);
  }
  for (const auto& map : maps)
    report.colorings.push_back(analyze_coloring(P, map, report.belts_4));

  return report;
}

namespace {

json verdict_to_json(const Verdict& v) {
  if (v.excluded) return v.note;
  return v.value;
}

json cycle_list_to_json(const std::vector<Belt>& belts) {
  json out = json::array();
  for (const auto& b : belts) out.push_back(b.facet_cycle());
  return out;
}

json circuits_to_json(const std::vector<PrismaticCircuit>& circuits,
                      const SimplePolytope3* P) {
  json out = json::array();
  for (const auto& c : circuits) {
    json item;
    item["facets"] = c.facet_cycle();
    if (P) {
      json edges = json::array();
      for (int e : c.edge_cycle()) {
        const Edge& ed = P->edges()[static_cast<size_t>(e)];
        edges.push_back({ed.u, ed.v});
      }
      item["edges"] = edges;
    }
    out.push_back(item);
  }
  return out;
}

json coloring_to_json(const ColoringReport& cr) {
  json colors = json::object();
  for (int f = 0; f < cr.coloring.facet_count(); ++f) {
    unsigned bits = cr.coloring.color(f).bits();
    colors[std::to_string(f)] = {bits & 1u, (bits >> 1) & 1u, (bits >> 2) & 1u};
  }
  json sections = json::array();
  for (const auto& s : cr.sections) {
    json sj;
    sj["belt"] = s.belt.facet_cycle();
    sj["case"] = s.cls.case_index;
    sj["surface"] = surface_kind_name(s.cls.surface);
    json comps = json::array();
    for (const auto& comp : s.surface.per_component)
      comps.push_back({{"chi", comp.euler_characteristic},
                       {"orientable", comp.orientable},
                       {"name", comp.surface_name}});
    sj["components"] = comps;
    sj["verified"] = s.surface_matches_class;
    sections.push_back(sj);
  }
  return json{{"colors", colors},
              {"orientable", cr.orientable},
              {"complex_orientable", cr.complex_orientable},
              {"euler_characteristic", cr.euler_characteristic},
              {"z2_witness_verified", cr.z2_witness_verified},
              {"sections", sections}};
}

}  // namespace

std::string report_to_json(const ClassificationReport& report) {
  json doc;
  doc["polytope"] = {{"name", report.name},
                     {"V", report.vertex_count},
                     {"E", report.edge_count},
                     {"F", report.facet_count}};
  doc["circuits"] = {
      {"prismatic_3",
       {{"count", report.prismatic_3.size()}, {"list", circuits_to_json(report.prismatic_3, nullptr)}}},
      {"prismatic_4",
       {{"count", report.prismatic_4.size()}, {"list", circuits_to_json(report.prismatic_4, nullptr)}}}};
  doc["belts"] = {{"count", report.belts_4.size()}, {"list", cycle_list_to_json(report.belts_4)}};
  doc["verdicts"] = {{"is_simplex", report.is_simplex},
                     {"flag", report.flag},
                     {"atoroidal", verdict_to_json(report.atoroidal)},
                     {"aspherical", verdict_to_json(report.aspherical)},
                     {"hyperbolic_realizable", verdict_to_json(report.hyperbolic_realizable)}};
  json colorings = json::array();
  for (const auto& cr : report.colorings) colorings.push_back(coloring_to_json(cr));
  doc["colorings"] = colorings;
  return doc.dump();
}

bool SuiteReport::all_passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const SuiteAssertion& a) {
    return a.status != SuiteAssertion::Status::Fail;
  });
}

SuiteReport run_theorem_suite(const std::vector<SimplePolytope3>& corpus) {
  SuiteReport report;
  auto add = [&](const SimplePolytope3& P, const std::string& name,
                 SuiteAssertion::Status status, const std::string& detail = {}) {
    report.assertions.push_back({P.name(), name, status, detail});
  };

  for (const SimplePolytope3& P : corpus) {
    auto belts = find_belts(P, 4);
    auto circuits3 = find_prismatic_circuits(P, 3);
    auto circuits4 = find_prismatic_circuits(P, 4);

    // (a) forward direction: each 4-belt carries a verified Z^2 witness
    {
      bool ok = true;
      std::string detail;
      for (const Belt& b : belts) {
        auto w = racg::z2_witness(P, b);
        if (!w.ok()) {
          ok = false;
          detail = "witness failed on belt";
          break;
        }
      }
      add(P, "4-belt gives Z^2 witness",
          ok ? SuiteAssertion::Status::Pass : SuiteAssertion::Status::Fail, detail);
    }

    // (b) converse core: induced 4-cycle detection agrees with belt search
    {
      bool agree = racg::has_induced_4_cycle(P) == !belts.empty();
      add(P, "induced-4-cycle criterion agrees with belt search",
          agree ? SuiteAssertion::Status::Pass : SuiteAssertion::Status::Fail);
    }

    // (c) circuit/belt implication under no prismatic 3-circuit
    if (!circuits3.empty()) {
      add(P, "prismatic-4 <=> 4-belt under no-prismatic-3", SuiteAssertion::Status::Skipped,
          "polytope has prismatic 3-circuits");
    } else {
      bool iff = circuits4.empty() == belts.empty();
      bool determined = true;
      for (const auto& c : circuits4)
        if (!circuit_to_belt(P, c)) determined = false;
      add(P, "prismatic-4 <=> 4-belt under no-prismatic-3",
          (iff && determined) ? SuiteAssertion::Status::Pass : SuiteAssertion::Status::Fail);
    }

    // (d) flag <=> no prismatic 3-circuit
    if (P.is_simplex()) {
      add(P, "flag <=> no prismatic 3-circuit", SuiteAssertion::Status::Skipped,
          "equivalence excludes the simplex");
    } else {
      auto p1 = proposition_p1_check(P);
      add(P, "flag <=> no prismatic 3-circuit",
          p1.agree ? SuiteAssertion::Status::Pass : SuiteAssertion::Status::Fail);
    }
  }
  return report;
}

std::vector<SimplePolytope3> default_corpus() {
  std::vector<SimplePolytope3> corpus;
  corpus.push_back(SimplePolytope3::builtin("simplex"));
  corpus.push_back(SimplePolytope3::builtin("cube"));
  for (int k = 3; k <= 8; ++k) corpus.push_back(SimplePolytope3::builtin("prism", k));
  corpus.push_back(SimplePolytope3::builtin("dodecahedron"));
  return corpus;
}

}  // namespace smallcover
