// Worked decompositions of tensor products of typical crystals, listed
// family by family as closed formulas in the level offset n.
#pragma once

#include <vector>

#include "supercrystal/roots.hpp"

namespace supercrystal {

struct WorkedExample {
  AlgebraType type;
  Weight first;   // lambda' + omega_0
  Weight second;  // lambda + omega_0
  /// Summands with n0 <= cap, sorted.
  std::vector<Weight> summands(int cap) const;
  /// Number of level progressions (each continues by +2 omega_0).
  int family_count() const;

  std::vector<std::pair<std::vector<int>, int>> families;  // (lowest form n1..nN, base n0)
};

/// D(2,1): B(-omega_1 - omega_2 + omega_0) (x) B(-3 omega_1 - 3 omega_2 + omega_0),
/// 16 families for each j, k in {0, 1}.
WorkedExample example_rank_two();
/// D(4,1): B(-omega_4 + omega_0) (x) B(omega_0), 25 families.
WorkedExample example_spin_omega0();

}  // namespace supercrystal
