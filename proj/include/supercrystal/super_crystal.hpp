// Crystals of U_q(D(N,1)) and U_q(B(N,1)) realized inside tensor words of
// the super spin crystal B(-omega_N): Kashiwara operators including index 0,
// lowest-weight detection, truncated decomposition, classical component
// labels B(Lambda; l), 0-arrows, and the models of B(omega_0) and of
// typical crystals.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "supercrystal/classical_crystal.hpp"
#include "supercrystal/roots.hpp"

namespace supercrystal {

/// v(i_1, ..., i_N)_k.
struct Atom {
  SpinElement signs;
  int level = 0;

  std::string to_string() const;  // "(+-+-)_3"
  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Left-associated tensor word a_1 (x) a_2 (x) ... of atoms.
using Word = std::vector<Atom>;

/// <h_0, wt(a)>: k if i_1 = '+', k + 1 if i_1 = '-'.
int atom_n0(const Atom& a);
Weight atom_weight(const Atom& a, const AlgebraType& type);
/// For D, true when the atom lies in B(-omega_N) and false when it lies in
/// B(-omega_{N-1}). Always true for B.
bool in_plus_spin_module(const Atom& a, const AlgebraType& type);

/// Index 0..N. For i = 0: e sends (-,s)_k to (+,s)_{k+1}, f is its inverse.
std::optional<Atom> atom_kashiwara(Dir dir, int i, const Atom& a, const AlgebraType& type);

/// Position of the atom the operator acts on, or nullopt when the result is 0.
std::optional<std::size_t> acting_position(Dir dir, int i, const Word& w, const AlgebraType& type);
std::optional<Word> tensor_kashiwara(Dir dir, int i, const Word& w, const AlgebraType& type);

/// (eps_i, phi_i) for 1 <= i <= N; throws std::invalid_argument for i = 0.
std::pair<int, int> epsilon_phi(int i, const Word& w, const AlgebraType& type);

Weight word_weight(const Word& w, const AlgebraType& type);
int total_level(const Word& w);
bool is_lowest(const Word& w, const AlgebraType& type);
bool is_classical_lowest(const Word& w, const AlgebraType& type);

std::string word_key(const Word& w);
std::string to_string(const Word& w);
Word to_atoms(const SpinWord& w, int level = 0);
Word concat(Word a, const Word& b);

/// Lowest word (+,...,+)_0 (x) (-,...,-)_0 of B(omega_0).
Word omega0_lowest_word(const AlgebraType& type);
/// b (x) u_{omega_0}.
Word shift(const Word& b, const AlgebraType& type);

/// All words reachable from `seed` by e-operators 0..N with total level <= max_level, sorted.
std::vector<Word> e_closure(const Word& seed, const AlgebraType& type, int max_level);

using Character = std::map<Weight, long>;
/// Sum of characters truncated to n0 <= cap.
Character convolve(const Character& a, const Character& b, int cap);
Character shift_character(const Character& a, int n0_shift, int cap);

enum class FactorKind { spin, spin_minus, omega0, typical, atypical };

/// An irreducible crystal B(lambda) realized by words of atoms.
class SuperFactor {
 public:
  /// B(-omega_N).
  static SuperFactor spin(const AlgebraType& type);
  /// B(-omega_{N-1}); family D only.
  static SuperFactor spin_minus(const AlgebraType& type);
  static SuperFactor omega0(const AlgebraType& type);
  /// B(lambda) for n0 >= 1 as B(omega_0) (x) B(lambda_cl; 0) (x) u_{omega_0}^(n0 - 1).
  static SuperFactor typical(const Weight& lambda, const AlgebraType& type);
  /// Model for any lambda = n0 omega_0 - sum n_i omega_i.
  static SuperFactor irreducible(const Weight& lambda, const AlgebraType& type);

  FactorKind kind() const { return kind_; }
  const AlgebraType& type() const { return type_; }
  const Weight& lowest_weight() const { return lowest_weight_; }
  const Word& lowest_word() const { return lowest_word_; }
  std::size_t word_length() const { return lowest_word_.size(); }
  std::string name() const;

  /// Every vertex with total level <= max_level, sorted.
  std::vector<Word> vertices(int max_level) const;
  /// Per-weight vertex counts at weights with n0 <= cap.
  Character character(int cap) const;

 private:
  SuperFactor(FactorKind kind, AlgebraType type, Weight lowest_weight, Word lowest_word);
  FactorKind kind_;
  AlgebraType type_;
  Weight lowest_weight_;
  Word lowest_word_;
};

/// Finite vertex set with lookup.
class SuperGraph {
 public:
  SuperGraph(AlgebraType type, std::vector<Word> vertices);
  const AlgebraType& type() const { return type_; }
  const std::vector<Word>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  long find(const Word& w) const;

  struct Edge {
    std::size_t source;
    std::size_t target;
    int index;
  };
  /// f-edges that stay inside the vertex set.
  std::vector<Edge> f_edges() const;

 private:
  AlgebraType type_;
  std::vector<Word> vertices_;
  std::unordered_map<std::string, long> index_;
};

/// Simple root alpha_i in the omega basis (column i of the Cartan matrix).
Weight simple_root_weight(const AlgebraType& type, int i);

/// Crystal axioms on a finite vertex set: e and f are mutually inverse
/// partial maps, they shift weights by -+alpha_i, and
/// phi_i - eps_i = <h_i, wt> for i >= 1. Returns one message per violation.
std::vector<std::string> check_crystal_axioms(const SuperGraph& graph);

/// All words of factors[0] (x) ... with total level <= max_level, in lexicographic factor order.
std::vector<Word> product_vertices(const std::vector<SuperFactor>& factors, int max_level);

struct DecompositionSummary {
  std::vector<Weight> summands;  // sorted multiset of component lowest weights
  Character multiplicity;        // per-weight multiplicities of the whole crystal
  int cap = 0;
  int complete_below = 0;
};

enum class LowestSearch {
  seeded,     // first factor lowest (x) anything
  exhaustive  // every product word
};

struct SuperDecomposition {
  DecompositionSummary summary;
  std::vector<Word> lowest_vertices;  // with n0 <= cap
};

/// Lowest vertices of the product with n0 <= cap and its character.
/// Throws std::invalid_argument for cap < 0 or no factors.
SuperDecomposition decompose_super(const std::vector<SuperFactor>& factors, int cap,
                                   LowestSearch search = LowestSearch::seeded);

/// B(Lambda; l).
struct SuperComponentLabel {
  ClassicalWeight classical_lowest;
  int level = 0;
  std::string to_string(const AlgebraType& type) const;
  friend bool operator==(const SuperComponentLabel&, const SuperComponentLabel&) = default;
  friend auto operator<=>(const SuperComponentLabel&, const SuperComponentLabel&) = default;
};

struct LabeledComponents {
  std::vector<SuperComponentLabel> labels;  // one per classical component
  std::vector<Word> lowest;                 // classical-lowest vertex of each component
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> membership;      // vertex index -> component index
};

/// Classical (indices 1..N) components of a vertex set closed under them.
LabeledComponents label_super_components(const SuperGraph& graph);

enum class Side { L, R };

struct ZeroArrow {
  SuperComponentLabel source;
  SuperComponentLabel target;
  Side side;
  friend bool operator==(const ZeroArrow&, const ZeroArrow&) = default;
  friend auto operator<=>(const ZeroArrow&, const ZeroArrow&) = default;
};

struct ZeroArrowReport {
  std::vector<ZeroArrow> relations;        // distinct observed triples, sorted
  std::size_t edge_count = 0;
  std::size_t right_with_positive_first_level = 0;  // R-arrows whose first factor has level > 0
};

/// f_0-edges classified by the side they act on; the first `split` atoms form the left factor.
ZeroArrowReport zero_arrow_relations(const SuperGraph& graph, const LabeledComponents& labels, std::size_t split);

struct LabeledCrystal {
  SuperGraph graph;
  LabeledComponents components;
};

/// B(omega_0) truncated at total level cap, with its classical labels.
LabeledCrystal build_omega0(const AlgebraType& type, int cap);

/// The product set B(omega_0) (x) B(lambda_cl; 0) for n0 = 1 (shifted for n0 > 1).
/// Throws std::invalid_argument for atypical lambda.
SuperGraph typical_model(const Weight& lambda, const AlgebraType& type, int cap);

/// Vertices of B(-omega_N) (x) B(-omega_N), or (x) B(-omega_{N-1}) with `minus_second`.
SuperGraph spin_spin_graph(const AlgebraType& type, bool minus_second, int cap);

}  // namespace supercrystal
