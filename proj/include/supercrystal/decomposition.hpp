// Closed-form decompositions (spin (x) spin, B(omega_0), typical crystals,
// tensor products of typical crystals) and their comparison with the
// brute-force decomposition of module super_crystal.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "supercrystal/classical_crystal.hpp"
#include "supercrystal/roots.hpp"
#include "supercrystal/super_crystal.hpp"

namespace supercrystal {

/// Fills the per-weight table of a summand list with the characters of the
/// irreducible models, truncated at n0 <= cap.
DecompositionSummary summary_from_summands(std::vector<Weight> summands, const AlgebraType& type, int cap);

/// Classical components of spin (x) spin: -Xi_k for k = N, N-2, ... (second = plus)
/// or k = N-1, N-3, ... (second = minus) for D; every k = 0..N for B. Sorted.
std::vector<ClassicalWeight> classical_spin_spin_formula(const AlgebraType& type, SpinClass second);

/// Summands of B(-omega_N) (x) B(-omega_N) (second = plus) or
/// B(-omega_N) (x) B(-omega_{N-1}) (second = minus, family D only), n0 <= cap.
DecompositionSummary spin_spin_formula(const AlgebraType& type, SpinClass second, int cap);

/// W: -Xi_0..-Xi_N, plus -Xi_N' for family D.
std::vector<ClassicalWeight> omega0_nu_set(const AlgebraType& type);
/// z^i(nu) for nu in W.
std::vector<int> omega0_z_values(const ClassicalWeight& nu, const AlgebraType& type);

/// Labels B(nu; z^i(nu) + 2n) of B(omega_0) with level <= cap, sorted.
std::vector<SuperComponentLabel> omega0_formula(const AlgebraType& type, int cap);

/// Index-1 count (indices 1 and 2 for D with N = 2) in the simple-root
/// expansion of mu - first - second. Throws std::domain_error when the
/// expansion is not a non-negative integral combination.
int a_value(const ClassicalWeight& mu, const ClassicalWeight& first, const ClassicalWeight& second,
            const AlgebraType& type);

/// Labels B(mu^j; z^i(nu) + a(mu^j) + 2n + n0 - 1) of the typical crystal B(lambda), level <= cap, sorted.
std::vector<SuperComponentLabel> typical_structure_formula(const Weight& lambda, const AlgebraType& type, int cap);

/// Summands of B(lambda' + omega_0) (x) B(lambda + omega_0) with n0 <= cap.
/// Both inputs must have n0 = 0.
DecompositionSummary main_theorem(const Weight& lambda_prime, const Weight& lambda, const AlgebraType& type, int cap);

struct MultiplicityMismatch {
  Weight weight;
  long predicted = 0;
  long observed = 0;
};

struct CompareReport {
  std::vector<Weight> missing;  // predicted but not observed
  std::vector<Weight> extra;    // observed but not predicted
  std::vector<MultiplicityMismatch> multiplicity_mismatches;
  bool match() const { return missing.empty() && extra.empty() && multiplicity_mismatches.empty(); }
};

/// Multiset and per-weight comparison at n0 <= complete_below.
/// Throws std::invalid_argument when the caps differ.
CompareReport compare(const DecompositionSummary& predicted, const DecompositionSummary& observed);

/// Label multiset difference (predicted minus observed and the reverse).
struct LabelDiff {
  std::vector<SuperComponentLabel> missing;
  std::vector<SuperComponentLabel> extra;
  bool match() const { return missing.empty() && extra.empty(); }
};
LabelDiff compare_labels(std::vector<SuperComponentLabel> predicted, std::vector<SuperComponentLabel> observed);

/// Labels of a labeled crystal with level <= cap, sorted.
std::vector<SuperComponentLabel> observed_labels(const LabeledComponents& comps, int cap);


/// Index k with Lambda = -Xi_k; `prime` is set for -Xi_N' (family D).
struct XiIndex {
  int k = 0;
  bool prime = false;
};
std::optional<XiIndex> xi_index(const ClassicalWeight& Lambda, const AlgebraType& type);

/// Whether an f_0-arrow between components of B(-omega_N) (x) B(-omega_N)
/// is one of the connections predicted for the spin square, with the first
/// factor as the left side.
bool zero_arrow_allowed(const ZeroArrow& arrow, const AlgebraType& type);

/// Summands of B(lambda') (x) B(lambda) for n0', n0 >= 1: main_theorem shifted
/// by (n0' - 1) + (n0 - 1) omega_0.
DecompositionSummary typical_product_formula(const Weight& lambda_prime, const Weight& lambda, const AlgebraType& type,
                                             int cap);

}  // namespace supercrystal
