// Spin crystals of D(N) and B(N): sign vectors, single-column tableaux,
// semistandard skew tableaux, Koga's classification of spin (x) spin and a
// brute-force decomposition oracle for tensor products of classical crystals.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "supercrystal/roots.hpp"
#include "supercrystal/tensor_rule.hpp"

namespace supercrystal {

/// Sign vector (i_1, ..., i_N); bit j of `minus` set means i_{j+1} = '-'.
struct SpinElement {
  int n = 0;
  std::uint32_t minus = 0;

  static SpinElement all_plus(int n) { return {n, 0}; }
  /// (+^plus_count, -^(n - plus_count)).
  static SpinElement plus_then_minus(int n, int plus_count);
  /// Parses "++--" style strings.
  static SpinElement parse(const std::string& s);

  bool is_minus(int position) const { return (minus >> (position - 1)) & 1U; }
  int minus_count() const;
  std::string to_string() const;

  friend bool operator==(const SpinElement&, const SpinElement&) = default;
  friend auto operator<=>(const SpinElement&, const SpinElement&) = default;
};

/// D(N) spin classes: `plus` has an even number of '-', `minus` an odd one.
enum class SpinClass { plus, minus };
SpinClass spin_class(const SpinElement& b);

/// Sign-swap Kashiwara operators, 1 <= i <= N; nullopt encodes 0.
/// Throws std::out_of_range for other i.
std::optional<SpinElement> spin_kashiwara(Dir dir, int i, const SpinElement& b, const AlgebraType& type);

/// (eps_i, phi_i) of a spin element; each is 0 or 1.
std::pair<int, int> spin_strings(int i, const SpinElement& b, const AlgebraType& type);

/// Weight in the Lambda basis; (+,...,+) has weight -Lambda_N.
ClassicalWeight spin_weight(const SpinElement& b, const AlgebraType& type);

/// All spin elements (D: those of the given class; B: all 2^N).
std::vector<SpinElement> spin_elements(const AlgebraType& type, SpinClass cls = SpinClass::plus);

// ---- tableaux -------------------------------------------------------------

/// Letters are encoded by rank: a -> a and a-bar -> 2N + 1 - a.
using Column = std::vector<int>;

std::string letter_name(int rank, int n);
/// Column t(a_1, ..., a_N) of b: position a with '+' gives a, with '-' gives
/// a-bar; entries sorted by rank.
Column to_tableau(const SpinElement& b);
/// Inverse of to_tableau; throws std::invalid_argument on malformed columns.
SpinElement from_tableau(const Column& column, int n);

/// a <= b in the letter order. For D the letters N and N-bar are incomparable.
bool letter_preceq(int a, int b, const AlgebraType& type);
/// Conditions (1)-(3): letters in range, strictly increasing, no a with a-bar.
bool is_valid_column(const Column& column, const AlgebraType& type);

/// t(a_1..a_{N-k}; a_{N-k+1}..a_N | b_1..b_k; b_{k+1}..b_N).
struct SkewTableau {
  Column right;  // a_1..a_N
  Column left;   // b_1..b_N
  int overlap = 0;  // k, the number of two-box rows
};

bool is_semistandard_skew(const SkewTableau& t, const AlgebraType& type);

/// Xi_k (k = 0..N); with `prime` and family D, Xi_N' = 2 Lambda_{N-1}.
ClassicalWeight xi(const AlgebraType& type, int k, bool prime = false);
/// Name of -Xi_k style labels, e.g. "-Xi2", "-Xi4'"; empty if not of that form.
std::string xi_name(const ClassicalWeight& w, const AlgebraType& type);

struct ClassicalComponentLabel {
  ClassicalWeight lowest_weight;
  friend bool operator==(const ClassicalComponentLabel&, const ClassicalComponentLabel&) = default;
  friend auto operator<=>(const ClassicalComponentLabel&, const ClassicalComponentLabel&) = default;
};

/// Component of u (x) v in spin (x) spin read off from semistandard tableaux.
/// D requires u in the plus class.
ClassicalComponentLabel koga_component(const SpinElement& u, const SpinElement& v, const AlgebraType& type);

// ---- words and finite classical crystals ----------------------------------

using SpinWord = std::vector<SpinElement>;

std::optional<SpinWord> word_kashiwara(Dir dir, int i, const SpinWord& w, const AlgebraType& type);
std::pair<int, int> word_strings(int i, const SpinWord& w, const AlgebraType& type);
ClassicalWeight word_weight(const SpinWord& w, const AlgebraType& type);
bool is_classical_lowest_word(const SpinWord& w, const AlgebraType& type);

/// A finite set of words closed under the Kashiwara operators 1..N.
class ClassicalCrystal {
 public:
  ClassicalCrystal(AlgebraType type, std::vector<SpinWord> vertices);

  /// Single-letter spin crystal (class ignored for B).
  static ClassicalCrystal spin(const AlgebraType& type, SpinClass cls = SpinClass::plus);

  const AlgebraType& type() const { return type_; }
  const std::vector<SpinWord>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t word_length() const { return vertices_.empty() ? 0 : vertices_.front().size(); }
  /// Index of w or -1.
  long find(const SpinWord& w) const;
  std::map<ClassicalWeight, long> character() const;

 private:
  AlgebraType type_;
  std::vector<SpinWord> vertices_;
  std::unordered_map<std::string, long> index_;
};

struct ClassicalComponent {
  ClassicalComponentLabel label;
  SpinWord lowest;
  std::size_t size = 0;
};

/// Connected components of factors[0] (x) ... (x) factors[m-1].
std::vector<ClassicalComponent> decompose_classical_tensor(const std::vector<ClassicalCrystal>& factors);

/// Component labels of every vertex of the product, by product index
/// (mixed radix, last factor fastest). Second element lists the components.
std::pair<std::vector<std::size_t>, std::vector<ClassicalComponent>> classical_components_with_membership(
    const std::vector<ClassicalCrystal>& factors);

/// Word of spin lowest vectors whose weights sum to Lambda.
SpinWord classical_lowest_word(const ClassicalWeight& Lambda, const AlgebraType& type);

/// B(Lambda) as the component of classical_lowest_word. Throws
/// std::invalid_argument unless Lambda is antidominant.
ClassicalCrystal realize_classical_crystal(const ClassicalWeight& Lambda, const AlgebraType& type);

std::string word_key(const SpinWord& w);

}  // namespace supercrystal
