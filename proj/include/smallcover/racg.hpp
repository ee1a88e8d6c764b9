#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "smallcover/belts.hpp"
#include "smallcover/coloring.hpp"
#include "smallcover/polytope.hpp"
#include "smallcover/z2.hpp"

namespace smallcover::racg {

/// Word over involution generators (0-based indices). The inverse of a word
/// is its reversal.
using Word = std::vector<int>;

Word inverse(const Word& w);
Word concat(std::initializer_list<Word> parts);
std::string word_to_string(const Word& w);  // 1-based, space separated

/// Right-angled Coxeter presentation: involution generators plus a symmetric
/// irreflexive commutation relation.
class Presentation {
 public:
  Presentation(int generator_count, const std::vector<std::pair<int, int>>& commuting_pairs);

  /// W_P: one generator per facet, commuting iff the facets intersect.
  static Presentation from_polytope(const SimplePolytope3& P);

  /// W_F: 4 generators with cycle commutation (1-2, 2-3, 3-4, 4-1 only).
  static Presentation square();

  int generators() const { return generators_; }
  bool commute(int a, int b) const;
  void check_generator(int g) const;
  void check_word(const Word& w) const;

 private:
  int generators_;
  std::vector<std::vector<bool>> commute_;
};

/// Unique normal form: geodesic and lexicographically least among all words
/// reachable by swapping commuting neighbors. Deletion of cancellable pairs
/// runs to fixpoint first, then a greedy least-letter extraction.
Word reduce(const Presentation& W, Word w);

/// Word problem via reduce: w1 * w2^-1 reduces to the empty word.
bool equal(const Presentation& W, const Word& w1, const Word& w2);

/// XOR of the letter colors; descends to the group since images of commuting
/// generators commute in the abelian target.
Z2Vec phi(const std::vector<Z2Vec>& generator_colors, const Word& w);

// ---------------------------------------------------------------------------
// Independent search-based oracle. Shares nothing with reduce/equal beyond
// the presentation type: equality is decided by breadth-first exploration of
// elementary moves (swap commuting neighbors, delete adjacent equal letters),
// with deletions expanded eagerly. Memory-capped; overflow is a hard error.

struct OracleLimits {
  std::size_t max_states = 1'000'000;
};

bool oracle_is_identity(const Presentation& W, const Word& w, OracleLimits limits = {});
bool oracle_equal(const Presentation& W, const Word& w1, const Word& w2,
                  OracleLimits limits = {});

/// Enumerates the whole group by Cayley-graph search, identifying elements
/// with oracle_equal. Hard error via OracleOverflow when max_elements is hit
/// (the group may be infinite).
std::vector<Word> oracle_elements(const Presentation& W, std::size_t max_elements,
                                  OracleLimits limits = {});

// ---------------------------------------------------------------------------
// Sections and lifts for the five belt-coloring classes. Everything below
// works in the canonical coordinates of a SectionClass; the square group W_F
// has generators s1..s4 = indices 0..3.

/// Set-section gamma of phi_F: gamma(e1)=s1, gamma(e2)=s2 and, for rank-3
/// classes, gamma(e3)=s1 s3 s1, extended over products in descending basis
/// order. Returns the normal form. The domain is <e1,e2> for rank-2 classes
/// and all of Z_2^3 for rank-3 ones.
Word gamma_section(const SectionClass& cls, Z2Vec g);

/// Lift of the pi_1(M_F) generator beta_{i,g}:
///   S_{i,g} = gamma(g * lambda_i) s_i gamma(g)^-1, reduced.
/// edge_index is 1-based (1..4).
Word psi_generator(const SectionClass& cls, int edge_index, Z2Vec g);

struct ExactSequenceReport {
  bool section_ok = true;    // phi_F(gamma(g)) = g on every group element
  bool kernel_ok = true;     // phi_F(S_{i,g}) = 1 for all i, g
  bool relators_ok = true;   // every pi_1(M_F) relator maps to the empty word
  std::vector<std::string> failures;
  bool ok() const { return section_ok && kernel_ok && relators_ok; }
};

/// Computational verification of the splitting/exactness checks for one
/// coloring class.
ExactSequenceReport verify_exact_sequences(const SectionClass& cls);

// ---------------------------------------------------------------------------
// Fundamental group presentation of the small cover M.

struct Pi1Letter {
  int generator;  // index = facet * 8 + group element bits
  bool inverted;
};
using Pi1Word = std::vector<Pi1Letter>;

struct Pi1Presentation {
  int facet_count = 0;
  int base_vertex = 0;
  // relator families, each relator a word equal to 1:
  //   alpha_{F,g} alpha_{F,g*lambda(F)}
  //   alpha_{F,g} alpha_{F',g*lambda(F)} alpha_{F,g*lambda(F')}^-1 alpha_{F',g}^-1
  //   alpha_{F,g} for v in F
  std::vector<Pi1Word> involution_relators;
  std::vector<Pi1Word> commutation_relators;
  std::vector<Pi1Word> base_vertex_relators;
  int generator(int facet, Z2Vec g) const { return facet * 8 + g.bits(); }
};

/// Presentation of pi_1(M, v) with generators alpha_{F,g}.
Pi1Presentation pi1_presentation(const SimplePolytope3& P, const CharacteristicMap& map,
                                 int base_vertex);

/// The vertex of P whose incident facet triple is lexicographically least.
int default_base_vertex(const SimplePolytope3& P);

/// Section of Z_2^3 into W_P through the colors of the three facets at the
/// base vertex; those colors form a basis and the three generators commute,
/// so this section is a genuine homomorphism.
class VertexSection {
 public:
  VertexSection(const SimplePolytope3& P, const CharacteristicMap& map, int base_vertex);
  Word word_for(Z2Vec g) const;
  int base_vertex() const { return vertex_; }

 private:
  int vertex_;
  std::array<int, 3> facets_;
  std::array<Z2Vec, 3> colors_;
};

/// psi(alpha_{F,g}) = gamma_v(g*lambda(F)) t_F gamma_v(g)^-1 as a word in W_P.
Word psi_alpha(const VertexSection& section, const CharacteristicMap& map, int facet, Z2Vec g);
Word psi_word(const VertexSection& section, const CharacteristicMap& map, const Pi1Word& w);

/// Checks that psi kills every relator of the pi_1(M,v) presentation.
struct PsiReport {
  bool ok = true;
  std::vector<std::string> failures;
};
PsiReport verify_psi_homomorphism(const SimplePolytope3& P, const CharacteristicMap& map,
                                  int base_vertex);

// ---------------------------------------------------------------------------
// Inclusion-induced maps and the Z^2 witness of the toroidality theorem.

/// i_*: beta_{i,g} as a word in alpha generators, in actual coordinates.
/// Rank-2 classes: alpha_{F_i, M(g)}. Rank-3 classes: the same for i in
/// {1,2,4} and alpha_{F_3, M(g)*lambda(F_3)*lambda(F_1)} alpha_{F_3, M(g)}
/// for i = 3. edge_index is 1-based; g lives in the canonical coordinates of
/// the class.
Pi1Word i_star(const SectionMatch& match, const CharacteristicMap& map, int edge_index,
               Z2Vec g_canonical);

/// j_*: letterwise s_i -> t_{F_i} into W_P (facet indices as generators).
Word j_star(const std::array<int, 4>& belt_facets, const Word& w_F);

struct Z2WitnessReport {
  Word x, y;  // t_{F1} t_{F3} and t_{F2} t_{F4}
  bool commutes = false;
  bool powers_nontrivial = false;   // x^n, y^n != 1 for 1 <= n <= power_bound
  bool box_free = false;            // x^a y^b = 1 only at a=b=0 in the box
  int power_bound = 16;
  int box_bound = 4;
  bool ok() const { return commutes && powers_nontrivial && box_free; }
};

/// Constructive witness that <x,y> = Z^2 sits inside W_P, following the
/// forward direction of the toroidality criterion.
Z2WitnessReport z2_witness(const SimplePolytope3& P, const Belt& belt);

struct Z2SearchResult {
  bool has_z2 = false;
  std::optional<Belt> belt;
  std::optional<Z2WitnessReport> witness;
  bool induced_cycle_agrees = false;  // independent induced-4-cycle search
};

/// W_P contains Z^2 iff a 4-belt exists; cross-checked against a direct
/// induced-4-cycle search in the facet adjacency graph.
Z2SearchResult has_z2_subgroup(const SimplePolytope3& P);

/// Direct search for an induced 4-cycle in the facet adjacency graph.
bool has_induced_4_cycle(const SimplePolytope3& P);

/// Commutation test of diagram routes: psi(i_*(beta)) vs j_*(psi_F(beta)) for
/// every non-killed generator beta_{i,g} of the class over the belt (killed
/// generators are the identity of pi_1(M_F), so the formula carries no
/// content there; their j-route is asserted empty instead). The base vertex
/// is taken on the belt edge F1^F2 as in the construction; because the
/// W_P-side lift is a reconstruction, mismatches are reported as witnesses,
/// never patched. `commutes_under_some_choice` retries every belt alignment
/// and both base-edge endpoints.
struct DiagramReport {
  int checked = 0;
  int skipped_killed = 0;
  std::vector<std::string> failures;
  bool commutes_under_some_choice = false;
  bool ok() const { return failures.empty(); }
};
DiagramReport check_diagram_commutation(const SimplePolytope3& P, const CharacteristicMap& map,
                                        const Belt& belt);

/// Word syntax: whitespace-separated 1-based generator indices; tokens of the
/// form #k name facet k (0-based) when the presentation comes from a
/// polytope.
Word parse_word(const std::string& text, const Presentation& W);

}  // namespace smallcover::racg
