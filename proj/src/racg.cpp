#include "smallcover/racg.hpp"

#include <algorithm>
#include <sstream>

namespace smallcover::racg {

Word inverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(w[i] + 1);
  }
  return s;
}

Presentation::Presentation(int generator_count,
                           const std::vector<std::pair<int, int>>& commuting_pairs)
    : generators_(generator_count),
      commute_(static_cast<size_t>(generator_count),
               std::vector<bool>(static_cast<size_t>(generator_count), false)) {
  if (generator_count <= 0)
    fail(ErrorCode::BadParameter, "presentation needs at least one generator");
  for (auto [a, b] : commuting_pairs) {
    check_generator(a);
    check_generator(b);
    if (a == b) fail(ErrorCode::BadParameter, "a generator cannot commute with itself here");
    commute_[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
    commute_[static_cast<size_t>(b)][static_cast<size_t>(a)] = true;
  }
}

Presentation Presentation::from_polytope(const SimplePolytope3& P) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < P.facet_count(); ++a)
    for (int b : P.adjacent_facets(a))
      if (a < b) pairs.push_back({a, b});
  return Presentation(P.facet_count(), pairs);
}

Presentation Presentation::square() {
  return Presentation(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

bool Presentation::commute(int a, int b) const {
  check_generator(a);
  check_generator(b);
  return commute_[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

void Presentation::check_generator(int g) const {
  if (g < 0 || g >= generators_)
    fail(ErrorCode::BadGenerator, "generator index " + std::to_string(g) + " out of range");
}

void Presentation::check_word(const Word& w) const {
  for (int g : w) check_generator(g);
}

Word reduce(const Presentation& W, Word w) {
  W.check_word(w);

  // deletion phase: cancel w[i], w[j] when every letter strictly between
  // commutes with them (Tits: a word with no such pair is geodesic)
  bool deleted = true;
  while (deleted) {
    deleted = false;
    const int n = static_cast<int>(w.size());
    for (int j = 1; j < n && !deleted; ++j) {
      for (int i = j - 1; i >= 0; --i) {
        if (w[static_cast<size_t>(i)] == w[static_cast<size_t>(j)]) {
          w.erase(w.begin() + j);
          w.erase(w.begin() + i);
          deleted = true;
          break;
        }
        if (!W.commute(w[static_cast<size_t>(i)], w[static_cast<size_t>(j)])) break;
      }
    }
  }

  // lexicographic phase: repeatedly extract the least letter that can be
  // shuffled to the front
  Word out;
  out.reserve(w.size());
  while (!w.empty()) {
    int best_pos = -1;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      bool movable = true;
      for (int j = 0; j < i; ++j) {
        if (w[static_cast<size_t>(j)] == w[static_cast<size_t>(i)] ||
            !W.commute(w[static_cast<size_t>(j)], w[static_cast<size_t>(i)])) {
          movable = false;
          break;
        }
      }
      if (movable && (best_pos < 0 || w[static_cast<size_t>(i)] < w[static_cast<size_t>(best_pos)]))
        best_pos = i;
    }
    out.push_back(w[static_cast<size_t>(best_pos)]);
    w.erase(w.begin() + best_pos);
  }
  return out;
}

bool equal(const Presentation& W, const Word& w1, const Word& w2) {
  return reduce(W, concat({w1, inverse(w2)})).empty();
}

Z2Vec phi(const std::vector<Z2Vec>& generator_colors, const Word& w) {
  Z2Vec out;
  for (int g : w) {
    if (g < 0 || g >= static_cast<int>(generator_colors.size()))
      fail(ErrorCode::BadGenerator, "no color for generator " + std::to_string(g));
    out = out * generator_colors[static_cast<size_t>(g)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// sections and lifts in canonical coordinates

namespace {

void check_class_domain(const SectionClass& cls, Z2Vec g) {
  if (cls.rank == 2 && (g.bits() & 4u))
    fail(ErrorCode::BadIndex, "group element " + g.to_string() +
                                  " lies outside <e1,e2> for a rank-2 class");
}

std::vector<Z2Vec> class_domain(const SectionClass& cls) {
  std::vector<Z2Vec> out;
  for (unsigned bits = 0; bits < (cls.rank == 2 ? 4u : 8u); ++bits)
    out.push_back(Z2Vec(bits));
  return out;
}

std::vector<Z2Vec> tuple_colors(const SectionClass& cls) {
  return std::vector<Z2Vec>(cls.tuple.begin(), cls.tuple.end());
}

}  // namespace

Word gamma_section(const SectionClass& cls, Z2Vec g) {
  check_class_domain(cls, g);
  static const Word g1 = {0};        // s1
  static const Word g2 = {1};        // s2
  static const Word g3 = {0, 2, 0};  // s1 s3 s1
  Word w;
  if (g.bits() & 1u) w.insert(w.end(), g1.begin(), g1.end());
  if (g.bits() & 2u) w.insert(w.end(), g2.begin(), g2.end());
  if (g.bits() & 4u) w.insert(w.end(), g3.begin(), g3.end());
  return reduce(Presentation::square(), w);
}

// The lift composes path-wise: the section of the starting copy (inverted),
// the crossing letter, the section of the ending copy. The killed-generator
// relators force this shape; with it every relator family of the pi_1(M_F)
// presentation dies in W_F, which the exact-sequence check verifies per
// class.
Word psi_generator(const SectionClass& cls, int edge_index, Z2Vec g) {
  if (edge_index < 1 || edge_index > 4)
    fail(ErrorCode::BadIndex, "edge index must lie in 1..4");
  check_class_domain(cls, g);
  Z2Vec lambda_i = cls.tuple[static_cast<size_t>(edge_index - 1)];
  Word w = concat({inverse(gamma_section(cls, g)), {edge_index - 1},
                   gamma_section(cls, g * lambda_i)});
  return reduce(Presentation::square(), w);
}

ExactSequenceReport verify_exact_sequences(const SectionClass& cls) {
  ExactSequenceReport report;
  const Presentation WF = Presentation::square();
  const auto colors = tuple_colors(cls);
  const auto domain = class_domain(cls);

  for (Z2Vec g : domain) {
    if (phi(colors, gamma_section(cls, g)) != g) {
      report.section_ok = false;
      report.failures.push_back("phi(gamma(" + g.to_string() + ")) != " + g.to_string());
    }
  }

  for (int i = 1; i <= 4; ++i)
    for (Z2Vec g : domain) {
      if (!phi(colors, psi_generator(cls, i, g)).is_identity()) {
        report.kernel_ok = false;
        report.failures.push_back("phi(S_{" + std::to_string(i) + "," + g.to_string() +
                                  "}) != 1");
      }
    }

  auto relator_fails = [&](const Word& image, const std::string& label) {
    if (!reduce(WF, image).empty()) {
      report.relators_ok = false;
      report.failures.push_back(label + " maps to nonempty word " +
                                word_to_string(reduce(WF, image)));
    }
  };

  for (int i = 1; i <= 4; ++i) {
    Z2Vec lambda_i = cls.tuple[static_cast<size_t>(i - 1)];
    for (Z2Vec g : domain)
      relator_fails(concat({psi_generator(cls, i, g), psi_generator(cls, i, g * lambda_i)}),
                    "involution relator (i=" + std::to_string(i) + ", g=" + g.to_string() + ")");
  }

  const std::array<std::pair<int, int>, 4> adjacent_edges = {{{1, 2}, {2, 3}, {3, 4}, {4, 1}}};
  for (auto [i, j] : adjacent_edges) {
    Z2Vec li = cls.tuple[static_cast<size_t>(i - 1)];
    Z2Vec lj = cls.tuple[static_cast<size_t>(j - 1)];
    for (Z2Vec g : domain) {
      Word lhs = concat({psi_generator(cls, i, g), psi_generator(cls, j, g * li)});
      Word rhs = concat({psi_generator(cls, j, g), psi_generator(cls, i, g * lj)});
      relator_fails(concat({lhs, inverse(rhs)}),
                    "commutation relator (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                        ", g=" + g.to_string() + ")");
    }
  }

  for (int i = 1; i <= 2; ++i)
    for (Z2Vec g : domain)
      relator_fails(psi_generator(cls, i, g),
                    "killed generator beta_{" + std::to_string(i) + "," + g.to_string() + "}");
  if (cls.rank == 3) {
    for (Z2Vec g : domain)
      if (g.bits() & 1u)  // the coset e1<e2,e3>
        relator_fails(psi_generator(cls, 3, g),
                      "killed generator beta_{3," + g.to_string() + "}");
  }

  return report;
}

// ---------------------------------------------------------------------------
// pi_1(M) presentation and the lift into W_P

Pi1Presentation pi1_presentation(const SimplePolytope3& P, const CharacteristicMap& map,
                                 int base_vertex) {
  auto check = validate_coloring(P, map);
  if (!check.valid) fail(ErrorCode::InvalidColoring, check.violation->describe());
  const auto& vfacets = P.facets_of_vertex(base_vertex);

  Pi1Presentation pres;
  pres.facet_count = P.facet_count();
  pres.base_vertex = base_vertex;

  for (int f = 0; f < P.facet_count(); ++f)
    for (Z2Vec g : z2_all())
      pres.involution_relators.push_back(
          {{pres.generator(f, g), false}, {pres.generator(f, g * map.color(f)), false}});

  for (int f = 0; f < P.facet_count(); ++f)
    for (int f2 : P.adjacent_facets(f)) {
      if (f2 < f) continue;
      for (Z2Vec g : z2_all())
        pres.commutation_relators.push_back({
            {pres.generator(f, g), false},
            {pres.generator(f2, g * map.color(f)), false},
            {pres.generator(f, g * map.color(f2)), true},
            {pres.generator(f2, g), true},
        });
    }

  for (int f : vfacets)
    for (Z2Vec g : z2_all())
      pres.base_vertex_relators.push_back({{pres.generator(f, g), false}});

  return pres;
}

int default_base_vertex(const SimplePolytope3& P) {
  const VertexInfo* best = nullptr;
  for (const auto& vi : P.vertices())
    if (!best || vi.facets < best->facets) best = &vi;
  return best->id;
}

VertexSection::VertexSection(const SimplePolytope3& P, const CharacteristicMap& map,
                             int base_vertex)
    : vertex_(base_vertex), facets_(P.facets_of_vertex(base_vertex)) {
  for (int i = 0; i < 3; ++i)
    colors_[static_cast<size_t>(i)] = map.color(facets_[static_cast<size_t>(i)]);
  if (!independent_triple(colors_[0], colors_[1], colors_[2]))
    fail(ErrorCode::InvalidColoring, "base vertex colors are dependent");
}

Word VertexSection::word_for(Z2Vec g) const {
  // the three colors form a basis; solve for the unique expansion
  for (unsigned a = 0; a < 2; ++a)
    for (unsigned b = 0; b < 2; ++b)
      for (unsigned c = 0; c < 2; ++c) {
        Z2Vec acc;
        if (a) acc = acc * colors_[0];
        if (b) acc = acc * colors_[1];
        if (c) acc = acc * colors_[2];
        if (acc == g) {
          Word w;
          if (a) w.push_back(facets_[0]);
          if (b) w.push_back(facets_[1]);
          if (c) w.push_back(facets_[2]);
          return w;
        }
      }
  fail(ErrorCode::InternalInvariant, "basis expansion failed");
}

Word psi_alpha(const VertexSection& section, const CharacteristicMap& map, int facet, Z2Vec g) {
  return concat({inverse(section.word_for(g)), {facet},
                 section.word_for(g * map.color(facet))});
}

Word psi_word(const VertexSection& section, const CharacteristicMap& map, const Pi1Word& w) {
  Word out;
  for (const Pi1Letter& letter : w) {
    int facet = letter.generator / 8;
    Z2Vec g(static_cast<unsigned>(letter.generator % 8));
    Word image = psi_alpha(section, map, facet, g);
    if (letter.inverted) image = inverse(image);
    out.insert(out.end(), image.begin(), image.end());
  }
  return out;
}

PsiReport verify_psi_homomorphism(const SimplePolytope3& P, const CharacteristicMap& map,
                                  int base_vertex) {
  PsiReport report;
  const Presentation WP = Presentation::from_polytope(P);
  const VertexSection section(P, map, base_vertex);
  const Pi1Presentation pres = pi1_presentation(P, map, base_vertex);

  auto check_family = [&](const std::vector<Pi1Word>& family, const std::string& name) {
    for (size_t r = 0; r < family.size(); ++r) {
      Word image = reduce(WP, psi_word(section, map, family[r]));
      if (!image.empty()) {
        report.ok = false;
        report.failures.push_back(name + " relator #" + std::to_string(r) +
                                  " maps to " + word_to_string(image));
      }
    }
  };
  check_family(pres.involution_relators, "involution");
  check_family(pres.commutation_relators, "commutation");
  check_family(pres.base_vertex_relators, "base-vertex");
  return report;
}

// ---------------------------------------------------------------------------
// inclusion maps, Z^2 witness, diagram check

Pi1Word i_star(const SectionMatch& match, const CharacteristicMap& map, int edge_index,
               Z2Vec g_canonical) {
  if (edge_index < 1 || edge_index > 4)
    fail(ErrorCode::BadIndex, "edge index must lie in 1..4");
  check_class_domain(match.cls, g_canonical);
  const Z2Vec g = match.basis_to_actual.apply(g_canonical);
  const int facet = match.aligned_cycle[static_cast<size_t>(edge_index - 1)];
  auto gen = [&](int f, Z2Vec h) { return Pi1Letter{f * 8 + h.bits(), false}; };

  if (match.cls.rank == 3 && edge_index == 3) {
    Z2Vec shift = map.color(match.aligned_cycle[2]) * map.color(match.aligned_cycle[0]);
    return {gen(facet, g * shift), gen(facet, g)};
  }
  return {gen(facet, g)};
}

Word j_star(const std::array<int, 4>& belt_facets, const Word& w_F) {
  Word out;
  out.reserve(w_F.size());
  for (int letter : w_F) {
    if (letter < 0 || letter > 3)
      fail(ErrorCode::BadGenerator, "W_F word uses generator outside s1..s4");
    out.push_back(belt_facets[static_cast<size_t>(letter)]);
  }
  return out;
}

Z2WitnessReport z2_witness(const SimplePolytope3& P, const Belt& belt) {
  if (belt.length() != 4) fail(ErrorCode::NotAFourBelt, "z2_witness needs a 4-belt");
  const auto& cyc = belt.facet_cycle();
  const Presentation WP = Presentation::from_polytope(P);

  Z2WitnessReport report;
  report.x = {cyc[0], cyc[2]};
  report.y = {cyc[1], cyc[3]};

  report.commutes = equal(WP, concat({report.x, report.y}), concat({report.y, report.x}));

  auto power = [](const Word& base, int n) {
    Word w;
    Word unit = n >= 0 ? base : inverse(base);
    for (int i = 0; i < std::abs(n); ++i) w.insert(w.end(), unit.begin(), unit.end());
    return w;
  };

  report.powers_nontrivial = true;
  for (int n = 1; n <= report.power_bound; ++n) {
    if (reduce(WP, power(report.x, n)).empty() || reduce(WP, power(report.y, n)).empty()) {
      report.powers_nontrivial = false;
      break;
    }
  }

  report.box_free = true;
  for (int a = -report.box_bound; a <= report.box_bound && report.box_free; ++a)
    for (int b = -report.box_bound; b <= report.box_bound; ++b) {
      if (a == 0 && b == 0) continue;
      if (reduce(WP, concat({power(report.x, a), power(report.y, b)})).empty()) {
        report.box_free = false;
        break;
      }
    }

  return report;
}

bool has_induced_4_cycle(const SimplePolytope3& P) {
  const int F = P.facet_count();
  for (int a = 0; a < F; ++a)
    for (int b = a + 1; b < F; ++b)
      for (int c = b + 1; c < F; ++c)
        for (int d = c + 1; d < F; ++d) {
          // three cyclic structures on {a,b,c,d}: opposite pairs (a,c)/(b,d),
          // (a,b)/(c,d), (a,d)/(b,c)
          const std::array<std::array<int, 4>, 3> orders = {{
              {a, b, c, d},
              {a, c, b, d},
              {a, b, d, c},
          }};
          for (const auto& o : orders) {
            bool cycle = P.adjacent(o[0], o[1]) && P.adjacent(o[1], o[2]) &&
                         P.adjacent(o[2], o[3]) && P.adjacent(o[3], o[0]) &&
                         !P.adjacent(o[0], o[2]) && !P.adjacent(o[1], o[3]);
            if (cycle) return true;
          }
        }
  return false;
}

Z2SearchResult has_z2_subgroup(const SimplePolytope3& P) {
  Z2SearchResult result;
  auto belts = find_belts(P, 4);
  result.has_z2 = !belts.empty();
  if (!belts.empty()) {
    result.belt = belts.front();
    result.witness = z2_witness(P, belts.front());
  }
  result.induced_cycle_agrees = (has_induced_4_cycle(P) == result.has_z2);
  return result;
}

namespace {

bool generator_killed(const SectionClass& cls, int edge_index, Z2Vec g) {
  if (edge_index <= 2) return true;
  return cls.rank == 3 && edge_index == 3 && (g.bits() & 1u);
}

// runs the route comparison for one fixed alignment and base vertex
std::vector<std::string> diagram_failures(const SimplePolytope3& P,
                                          const CharacteristicMap& map,
                                          const SectionMatch& match, int base_vertex,
                                          const Presentation& WP, int* checked,
                                          int* skipped) {
  std::vector<std::string> failures;
  const VertexSection section(P, map, base_vertex);
  for (int i = 1; i <= 4; ++i)
    for (Z2Vec g : class_domain(match.cls)) {
      Word via_square =
          reduce(WP, j_star(match.aligned_cycle, psi_generator(match.cls, i, g)));
      if (generator_killed(match.cls, i, g)) {
        if (skipped) ++(*skipped);
        if (!via_square.empty())
          failures.push_back("killed generator beta_{" + std::to_string(i) + "," +
                             g.to_string() + "} has nonempty j-route");
        continue;
      }
      Word via_manifold = reduce(WP, psi_word(section, map, i_star(match, map, i, g)));
      if (checked) ++(*checked);
      if (via_manifold != via_square)
        failures.push_back(
            "beta_{" + std::to_string(i) + "," + g.to_string() + "}: psi(i_*(beta)) = " +
            word_to_string(via_manifold) + " but j_*(psi_F(beta)) = " +
            word_to_string(via_square));
    }
  return failures;
}

}  // namespace

DiagramReport check_diagram_commutation(const SimplePolytope3& P, const CharacteristicMap& map,
                                        const Belt& belt) {
  DiagramReport report;
  const Presentation WP = Presentation::from_polytope(P);
  const SectionMatch match = match_belt_section(map, belt);

  // deterministic choice: base vertex on the edge F1^F2 of the aligned belt,
  // lex-least endpoint
  auto edge_idx = P.shared_edge(match.aligned_cycle[0], match.aligned_cycle[1]);
  const Edge& edge = P.edges()[static_cast<size_t>(*edge_idx)];
  int v = P.facets_of_vertex(edge.u) < P.facets_of_vertex(edge.v) ? edge.u : edge.v;
  report.failures =
      diagram_failures(P, map, match, v, WP, &report.checked, &report.skipped_killed);
  if (report.failures.empty()) {
    report.commutes_under_some_choice = true;
    return report;
  }

  // retry over every alignment of the belt to its canonical tuple and both
  // endpoints of the base edge
  const auto restriction = belt_restriction(map, belt);
  for (int dir = 0; dir < 2 && !report.commutes_under_some_choice; ++dir)
    for (int rot = 0; rot < 4 && !report.commutes_under_some_choice; ++rot) {
      SectionMatch cand;
      cand.cls = match.cls;
      for (int i = 0; i < 4; ++i) {
        int idx = dir == 0 ? (rot + i) % 4 : (rot + 4 - i) % 4;
        cand.aligned_cycle[static_cast<size_t>(i)] =
            belt.facet_cycle()[static_cast<size_t>(idx)];
        cand.restriction[static_cast<size_t>(i)] = restriction[static_cast<size_t>(idx)];
      }
      for (const auto& m : LinearMapZ2::all_invertible()) {
        bool aligns = true;
        for (int i = 0; i < 4 && aligns; ++i)
          aligns = m.apply(cand.cls.tuple[static_cast<size_t>(i)]) ==
                   cand.restriction[static_cast<size_t>(i)];
        if (!aligns) continue;
        cand.basis_to_actual = m;
        auto e = P.shared_edge(cand.aligned_cycle[0], cand.aligned_cycle[1]);
        const Edge& base_edge = P.edges()[static_cast<size_t>(*e)];
        for (int vertex : {base_edge.u, base_edge.v})
          if (diagram_failures(P, map, cand, vertex, WP, nullptr, nullptr).empty()) {
            report.commutes_under_some_choice = true;
            break;
          }
        if (report.commutes_under_some_choice) break;
      }
    }
  return report;
}

Word parse_word(const std::string& text, const Presentation& W) {
  Word out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    try {
      if (token.size() > 1 && token[0] == '#') {
        int facet = std::stoi(token.substr(1));
        W.check_generator(facet);
        out.push_back(facet);
      } else {
        int idx = std::stoi(token);
        if (idx < 1 || idx > W.generators())
          fail(ErrorCode::BadWord, "generator index " + token + " out of range 1.." +
                                       std::to_string(W.generators()));
        out.push_back(idx - 1);
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(ErrorCode::BadWord, "cannot parse word token '" + token + "'");
    }
  }
  return out;
}

}  // namespace smallcover::racg
