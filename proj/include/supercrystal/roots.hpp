// Root data and weight arithmetic for the quantum superalgebras of type
// D(N,1) and B(N,1) and their even subalgebras D(N), B(N).
#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace supercrystal {

using Rational = boost::rational<std::int64_t>;

/// Coordinates in the orthogonal basis (delta, eps_1, ..., eps_N).
using OrthoVector = std::vector<Rational>;

enum class Family { D, B };

/// One of D(N,1) or B(N,1) with N >= 2.
class AlgebraType {
 public:
  AlgebraType(Family family, int n);

  Family family() const { return family_; }
  int rank() const { return n_; }
  /// Number of nodes of the super Dynkin diagram, N + 1.
  int nodes() const { return n_ + 1; }
  std::string name() const;

  friend bool operator==(const AlgebraType&, const AlgebraType&) = default;
  friend auto operator<=>(const AlgebraType&, const AlgebraType&) = default;

 private:
  Family family_;
  int n_;
};

Family parse_family(const std::string& s);
std::string family_name(Family f);

/// Integral weight stored by its coefficients in the basis omega_0..omega_N.
/// Coefficients are the actual (signed) coefficients, so the lowest weight
/// n0*omega_0 - sum n_i*omega_i has coeffs (n0, -n1, ..., -nN).
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coeffs);

  static Weight zero(int n);
  static Weight fundamental(int n, int i);
  /// n0*omega_0 - sum_{i>=1} n_i*omega_i from the list (n0, n1, ..., nN).
  static Weight from_lowest_form(std::span<const int> n_list);

  int rank() const { return static_cast<int>(coeffs_.size()) - 1; }
  int operator[](std::size_t i) const { return coeffs_[i]; }
  int& operator[](std::size_t i) { return coeffs_[i]; }
  /// <h_0, lambda>, the omega_0 coefficient.
  int n0() const { return coeffs_.front(); }
  std::span<const int> coeffs() const { return coeffs_; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// Human readable, e.g. "3w0 - w2".
  std::string to_string() const;

 private:
  std::vector<int> coeffs_;
};

/// Weight of the even subalgebra D(N) or B(N) in the basis Lambda_1..Lambda_N.
class ClassicalWeight {
 public:
  ClassicalWeight() = default;
  explicit ClassicalWeight(std::vector<int> coeffs);

  static ClassicalWeight zero(int n);
  static ClassicalWeight fundamental(int n, int i);  // Lambda_i, 1 <= i <= N

  int rank() const { return static_cast<int>(coeffs_.size()); }
  /// Coefficient of Lambda_i, 1 <= i <= N.
  int at(int i) const { return coeffs_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> coeffs() const { return coeffs_; }
  /// True when all coefficients are <= 0, i.e. -sum n_i Lambda_i with n_i >= 0.
  bool is_antidominant() const;

  ClassicalWeight& operator+=(const ClassicalWeight& o);
  ClassicalWeight& operator-=(const ClassicalWeight& o);
  friend ClassicalWeight operator+(ClassicalWeight a, const ClassicalWeight& b) { return a += b; }
  friend ClassicalWeight operator-(ClassicalWeight a, const ClassicalWeight& b) { return a -= b; }
  friend ClassicalWeight operator*(int k, ClassicalWeight a);

  friend bool operator==(const ClassicalWeight&, const ClassicalWeight&) = default;
  friend auto operator<=>(const ClassicalWeight&, const ClassicalWeight&) = default;

  std::string to_string() const;  // e.g. "-L1 - 2L4"

 private:
  std::vector<int> coeffs_;
};

/// Drops the omega_0 coefficient.
ClassicalWeight classical_restriction(const Weight& lambda);
/// Attaches omega_0 coefficient n0; lift(classical_restriction(w), w.n0()) == w.
Weight lift(const ClassicalWeight& Lambda, int n0);

struct RootData {
  AlgebraType type;
  std::vector<std::vector<int>> cartan;  // a_ij = <h_i, alpha_j>
  std::vector<int> parity;               // p(i)
  std::vector<int> lvalues;              // l_i
  std::vector<Rational> form_diagonal;   // (delta,delta), (eps_i,eps_i)
  std::vector<OrthoVector> simple_roots;
  std::vector<OrthoVector> fundamental_weights;
  std::vector<OrthoVector> even_positive_roots;
  std::vector<OrthoVector> odd_positive_roots;
  std::vector<OrthoVector> odd_roots_bar;  // the set used by the typicality test
  OrthoVector rho;
};

/// Cached, immutable root data for `type`.
const RootData& root_data(const AlgebraType& type);

std::vector<std::vector<int>> cartan_matrix(const AlgebraType& type);

OrthoVector to_orthogonal(const Weight& w, const AlgebraType& type);
/// Inverse of to_orthogonal; throws std::domain_error for non-integral input.
Weight from_orthogonal(const OrthoVector& x, const AlgebraType& type);

Rational bilinear(const OrthoVector& a, const OrthoVector& b, const AlgebraType& type);
Rational bilinear(const Weight& a, const Weight& b, const AlgebraType& type);

/// True iff (lambda - rho, beta) != 0 for every odd root beta.
bool is_typical(const Weight& lambda, const AlgebraType& type);

/// Classical simple root alpha_i (1 <= i <= N) in the Lambda basis.
ClassicalWeight classical_simple_root(const AlgebraType& type, int i);

/// Coefficients c_1..c_N with diff = sum c_i alpha_i over the classical simple
/// roots. Throws std::domain_error when the expansion is not integral.
std::vector<int> classical_root_expansion(const ClassicalWeight& diff, const AlgebraType& type);

std::string to_string(const Rational& r);

}  // namespace supercrystal
