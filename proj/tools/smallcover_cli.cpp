// Command-line frontend: classification reports and the individual search /
// word-problem operations, JSON on stdout.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smallcover/classify.hpp"
#include "smallcover/json_io.hpp"
#include "smallcover/racg.hpp"

using nlohmann::json;
using namespace smallcover;

namespace {

struct CommonArgs {
  std::string input;
  std::string coloring_path;
  std::string colorings_mode = "none";
  int k = 4;
  std::vector<std::string> words;
  bool pretty = false;
  int max_facets = 16;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::SchemaError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// racg subcommands accept a polytope (W_P), a bare presentation document
// {"generators": n, "commuting": [[i,j],...]} with 1-based pairs, or
// builtin:square for W_F.
racg::Presentation load_presentation(const std::string& input) {
  if (input == "builtin:square") return racg::Presentation::square();
  if (input.rfind("builtin:", 0) == 0)
    return racg::Presentation::from_polytope(load_polytope(input));
  std::string text = read_file(input);
  json doc = json::parse(text, nullptr, false);
  if (doc.is_object() && doc.contains("generators")) {
    int n = doc["generators"].get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& p : doc.value("commuting", json::array()))
      pairs.push_back({p.at(0).get<int>() - 1, p.at(1).get<int>() - 1});
    return racg::Presentation(n, pairs);
  }
  return racg::Presentation::from_polytope(parse_polytope(text));
}

void emit(const json& doc, const CommonArgs& args, const std::string& summary) {
  std::cout << doc.dump() << "\n";
  if (args.pretty) std::cerr << summary << "\n";
}

std::string verdict_summary(const ClassificationReport& r) {
  auto show = [](const Verdict& v) {
    return v.excluded ? v.note : (v.value ? std::string("yes") : std::string("no"));
  };
  return r.name + ": V=" + std::to_string(r.vertex_count) +
         " E=" + std::to_string(r.edge_count) + " F=" + std::to_string(r.facet_count) +
         " | prismatic3=" + std::to_string(r.prismatic_3.size()) +
         " prismatic4=" + std::to_string(r.prismatic_4.size()) +
         " belts4=" + std::to_string(r.belts_4.size()) +
         " | flag=" + (r.flag ? "yes" : "no") + " atoroidal=" + show(r.atoroidal) +
         " aspherical=" + show(r.aspherical) +
         " hyperbolic=" + show(r.hyperbolic_realizable) +
         " colorings=" + std::to_string(r.colorings.size());
}

int run(int argc, char** argv) {
  CLI::App app{"small cover classification over simple 3-polytopes"};
  app.require_subcommand(1);
  CommonArgs args;

  auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
    auto* opt = cmd->add_option("--input", args.input,
                                "polytope JSON file or builtin:<name>[:<k>]");
    if (needs_input) opt->required();
    cmd->add_flag("--pretty", args.pretty, "human-readable summary on stderr");
    return cmd;
  };

  auto* validate = add_common(app.add_subcommand("validate", "validate a polytope document"));

  auto* belts_cmd = add_common(app.add_subcommand("belts", "find k-belts"));
  belts_cmd->add_option("--k", args.k, "belt length")->default_val(4);

  auto* circuits = add_common(app.add_subcommand("circuits", "find prismatic k-circuits"));
  circuits->add_option("--k", args.k, "circuit length")->default_val(3);

  auto* colorings = add_common(app.add_subcommand("colorings", "enumerate characteristic maps"));
  bool up_to_basis = false;
  colorings->add_flag("--up-to-basis", up_to_basis, "one representative per basis-change orbit");
  colorings->add_option("--max-facets", args.max_facets, "enumeration guard override");

  auto* classify_cmd = add_common(app.add_subcommand("classify", "full classification report"));
  classify_cmd->add_option("--coloring", args.coloring_path, "coloring JSON file");
  classify_cmd->add_option("--colorings", args.colorings_mode,
                           "which colorings to analyze: all, first or none");
  classify_cmd->add_option("--max-facets", args.max_facets, "enumeration guard override");

  auto* reduce_cmd = add_common(app.add_subcommand("racg-reduce", "normal form of a word"));
  reduce_cmd->add_option("--word", args.words, "word, e.g. \"1 2 1\" or \"#0 #2\"")->required();

  auto* equal_cmd = add_common(app.add_subcommand("racg-equal", "compare two words"));
  equal_cmd->add_option("--word", args.words, "word (give twice)")->required()->expected(2);

  auto* section_cmd =
      add_common(app.add_subcommand("section", "classify the sections of all 4-belts"));
  section_cmd->add_option("--coloring", args.coloring_path, "coloring JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    SimplePolytope3 P = load_polytope(args.input);
    json doc = {{"valid", true},
                {"polytope",
                 {{"name", P.name()},
                  {"V", P.vertex_count()},
                  {"E", P.edge_count()},
                  {"F", P.facet_count()}}}};
    emit(doc, args, P.name() + " is a valid simple 3-polytope");
    return 0;
  }

  if (belts_cmd->parsed()) {
    SimplePolytope3 P = load_polytope(args.input);
    auto belts = find_belts(P, args.k);
    json list = json::array();
    for (const auto& b : belts) list.push_back(b.facet_cycle());
    json doc = {{"belts", list}};
    if (args.k == 4) {
      json degenerate = json::array();
      for (const auto& c : find_degenerate_4_cycles(P)) degenerate.push_back(c);
      doc["degenerate_4_cycles"] = degenerate;
    }
    emit(doc, args, std::to_string(belts.size()) + " belt(s) of length " + std::to_string(args.k));
    return 0;
  }

  if (circuits->parsed()) {
    SimplePolytope3 P = load_polytope(args.input);
    auto found = find_prismatic_circuits(P, args.k);
    json list = json::array();
    for (const auto& c : found) {
      json edges = json::array();
      for (int e : c.edge_cycle()) {
        const Edge& ed = P.edges()[static_cast<size_t>(e)];
        edges.push_back({ed.u, ed.v});
      }
      list.push_back({{"facets", c.facet_cycle()}, {"edges", edges}});
    }
    emit(json{{"circuits", list}}, args,
         std::to_string(found.size()) + " prismatic " + std::to_string(args.k) + "-circuit(s)");
    return 0;
  }

  if (colorings->parsed()) {
    SimplePolytope3 P = load_polytope(args.input);
    EnumerationOptions opt;
    opt.up_to_basis = up_to_basis;
    opt.max_facets = args.max_facets;
    auto maps = enumerate_colorings(P, opt);
    json list = json::array();
    for (const auto& m : maps) list.push_back(json::parse(serialize_coloring(m)));
    emit(json{{"count", maps.size()}, {"colorings", list}}, args,
         std::to_string(maps.size()) + " coloring(s)");
    return 0;
  }

  if (classify_cmd->parsed()) {
    SimplePolytope3 P = load_polytope(args.input);
    ClassifyOptions opt;
    opt.max_facets = args.max_facets;
    if (!args.coloring_path.empty())
      opt.coloring = parse_coloring(read_file(args.coloring_path), P.facet_count());
    else if (args.colorings_mode == "first")
      opt.mode = ColoringMode::First;
    else if (args.colorings_mode == "all")
      opt.mode = ColoringMode::All;
    else if (args.colorings_mode != "none")
      fail(ErrorCode::BadParameter, "--colorings must be all, first or none");
    ClassificationReport report = classify(P, opt);
    std::cout << report_to_json(report) << "\n";
    if (args.pretty) std::cerr << verdict_summary(report) << "\n";
    return 0;
  }

  if (reduce_cmd->parsed()) {
    racg::Presentation W = load_presentation(args.input);
    racg::Word w = racg::parse_word(args.words.at(0), W);
    emit(json{{"normal_form", racg::word_to_string(racg::reduce(W, w))}}, args, "reduced");
    return 0;
  }

  if (equal_cmd->parsed()) {
    racg::Presentation W = load_presentation(args.input);
    racg::Word a = racg::parse_word(args.words.at(0), W);
    racg::Word b = racg::parse_word(args.words.at(1), W);
    bool eq = racg::equal(W, a, b);
    emit(json{{"equal", eq}}, args, eq ? "equal" : "not equal");
    return 0;
  }

  if (section_cmd->parsed()) {
    SimplePolytope3 P = load_polytope(args.input);
    CharacteristicMap map = parse_coloring(read_file(args.coloring_path), P.facet_count());
    auto check = validate_coloring(P, map);
    if (!check.valid) fail(ErrorCode::InvalidColoring, check.violation->describe());
    json list = json::array();
    for (const Belt& belt : find_belts(P, 4)) {
      SectionClass cls = classify_belt_section(map, belt);
      SurfaceReport surface = surface_report(build_section_surface(belt, map));
      json comps = json::array();
      for (const auto& comp : surface.per_component)
        comps.push_back({{"chi", comp.euler_characteristic},
                         {"orientable", comp.orientable},
                         {"name", comp.surface_name}});
      list.push_back({{"belt", belt.facet_cycle()},
                      {"case", cls.case_index},
                      {"surface", surface_kind_name(cls.surface)},
                      {"components", comps}});
    }
    emit(json{{"sections", list}}, args, std::to_string(list.size()) + " section(s)");
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    json err = {{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
    std::cout << err.dump() << "\n";
    return is_internal_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    json err = {{"error", {{"code", "InternalInvariant"}, {"message", e.what()}}}};
    std::cout << err.dump() << "\n";
    return 2;
  }
}
