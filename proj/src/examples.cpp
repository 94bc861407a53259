#include "supercrystal/examples.hpp"

#include <algorithm>

namespace supercrystal {

std::vector<Weight> WorkedExample::summands(int cap) const {
  std::vector<Weight> out;
  for (const auto& [ns, base] : families)
    for (int l = base; l <= cap; l += 2) {
      std::vector<int> c{l};
      for (int x : ns) c.push_back(-x);
      out.emplace_back(std::move(c));
    }
  std::sort(out.begin(), out.end());
  return out;
}

int WorkedExample::family_count() const { return static_cast<int>(families.size()); }

WorkedExample example_rank_two() {
  const AlgebraType type(Family::D, 2);
  WorkedExample ex{type, Weight({1, -1, -1}), Weight({1, -3, -3}), {}};
  // (shift of omega_1, shift of omega_2, base offset) on top of
  // -(4 - 2j) omega_1 - (4 - 2k) omega_2 + (j + k + offset) omega_0.
  const int rows[][3] = {{0, 0, 2},  {0, 0, 6},  {1, 1, 2},  {1, 1, 4},  {1, -1, 3}, {1, -1, 5},
                         {-1, 1, 3}, {-1, 1, 5}, {-1, -1, 4}, {-1, -1, 6}, {2, 0, 3},  {0, 0, 4},
                         {-2, 0, 5}, {0, 2, 3},  {0, 0, 4},  {0, -2, 5}};
  for (int j = 0; j <= 1; ++j)
    for (int k = 0; k <= 1; ++k)
      for (const auto& r : rows) ex.families.push_back({{4 - 2 * j + r[0], 4 - 2 * k + r[1]}, j + k + r[2]});
  return ex;
}

WorkedExample example_spin_omega0() {
  const AlgebraType type(Family::D, 4);
  WorkedExample ex{type, Weight({1, 0, 0, 0, -1}), Weight({1, 0, 0, 0, 0}), {}};
  ex.families = {
      {{0, 0, 0, 1}, 2},  {{0, 0, 0, 1}, 10}, {{1, 0, 0, 1}, 2}, {{1, 0, 0, 1}, 8}, {{0, 0, 1, 0}, 3},
      {{0, 0, 1, 0}, 9},  {{0, 1, 0, 1}, 3},  {{0, 1, 0, 1}, 7}, {{1, 0, 1, 0}, 3}, {{1, 0, 1, 0}, 7},
      {{0, 0, 0, 1}, 4},  {{0, 0, 0, 1}, 8},  {{0, 0, 1, 2}, 4}, {{0, 0, 1, 2}, 6}, {{0, 1, 1, 0}, 4},
      {{0, 1, 1, 0}, 6},  {{1, 0, 0, 1}, 4},  {{1, 0, 0, 1}, 6}, {{0, 0, 1, 0}, 5}, {{0, 0, 1, 0}, 7},
      {{0, 0, 2, 1}, 5},  {{1, 0, 1, 0}, 5},  {{0, 0, 0, 3}, 5}, {{0, 1, 0, 1}, 5}, {{0, 0, 0, 1}, 6},
  };
  return ex;
}

}  // namespace supercrystal
