// Exact realization of the U_q-module V(-omega_N) on the basis v(signs)_k,
// with checkers for the defining relations, the polarization and the
// crystal lattice.
#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercrystal/qfield.hpp"
#include "supercrystal/roots.hpp"
#include "supercrystal/super_crystal.hpp"

namespace supercrystal {

/// Finite combination of basis vectors; zero coefficients are never stored.
class ModuleVector {
 public:
  ModuleVector() = default;
  static ModuleVector basis(const Atom& a) {
    ModuleVector v;
    v.terms_.emplace(a, LaurentRational(1));
    return v;
  }

  const std::map<Atom, LaurentRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Atom& a, const LaurentRational& c);

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const LaurentRational& c, const ModuleVector& v);
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  int max_level() const;  // -1 for the zero vector
  std::string to_string() const;

 private:
  std::map<Atom, LaurentRational> terms_;
};

/// e_i, f_i, t_i = q^{l_i h_i}, t_i^{-1}, q^{h_i} and the parity operator sigma.
struct Generator {
  enum class Kind { e, f, t, t_inverse, q_h, sigma };
  Kind kind = Kind::e;
  int index = 0;

  static Generator e(int i) { return {Kind::e, i}; }
  static Generator f(int i) { return {Kind::f, i}; }
  static Generator t(int i) { return {Kind::t, i}; }
  static Generator t_inverse(int i) { return {Kind::t_inverse, i}; }
  static Generator q_h(int i) { return {Kind::q_h, i}; }
  static Generator sigma() { return {Kind::sigma, 0}; }
  std::string to_string() const;
};

/// Raised when a nonzero image would leave the truncated basis.
class BoundaryError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct ModuleConventions {
  /// q_0 = q^{q0_power} in the e_0 and f_0 coefficients and in the norms.
  int q0_power = 1;
  /// Test hook: multiplies the f_0 coefficient by q.
  bool mutate_f0 = false;
};

/// q_0 = q^{l_0}: q for D(N,1), q^2 for B(N,1).
ModuleConventions default_conventions(const AlgebraType& type);

class SpinModule {
 public:
  SpinModule(AlgebraType type, int max_level, ModuleConventions conventions);
  SpinModule(AlgebraType type, int max_level) : SpinModule(type, max_level, default_conventions(type)) {}

  const AlgebraType& type() const { return type_; }
  int max_level() const { return max_level_; }
  const ModuleConventions& conventions() const { return conventions_; }
  /// Basis labels of V(-omega_N) with level <= max_level, sorted.
  const std::vector<Atom>& basis() const { return basis_; }

  /// q_i = q^{l_i}.
  LaurentRational q_i(int i) const;
  /// Throws BoundaryError when a nonzero image has level > max_level.
  ModuleVector act(const Generator& g, const ModuleVector& v) const;
  ModuleVector act(const Generator& g, const Atom& a) const { return act(g, ModuleVector::basis(a)); }

  /// Diagonal norm of a level-k basis vector: prod_{j=1}^k (q_0^{2j} - 1) / (q_0^2 - 1).
  LaurentRational norm(int level) const;
  LaurentRational polarization(const ModuleVector& u, const ModuleVector& v) const;

 private:
  ModuleVector act_basis(const Generator& g, const Atom& a) const;
  LaurentRational q0_power(int k) const;

  AlgebraType type_;
  int max_level_;
  ModuleConventions conventions_;
  std::vector<Atom> basis_;
};

struct RelationDefect {
  std::string relation;
  Family family = Family::D;
  int n = 0;
  std::string basis_label;
  std::string defect;
};

struct RelationReport {
  std::vector<RelationDefect> failures;
  std::size_t checks = 0;
  std::size_t boundary_skips = 0;
  bool pass() const { return failures.empty(); }
};

/// Weight, (anti)commutator, Serre, nilpotency and parity relations on every basis vector.
RelationReport check_relations(const SpinModule& module);
/// (x u, v) = (u, eta(x) v) for x = e_i, f_i on all basis pairs, plus symmetry and norms in A.
RelationReport check_polarization_contravariance(const SpinModule& module);
/// Kashiwara operators preserve the A-lattice and reduce to atom_kashiwara at q = 0.
RelationReport check_crystal_lattice(const SpinModule& module);

}  // namespace supercrystal
