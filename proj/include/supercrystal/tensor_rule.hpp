// Tensor product rule for indices i >= 1 on left-associated words.
// For b1 (x) b2 the rule is
//   e(b1 (x) b2) = b1 (x) e b2  if eps(b1) <= phi(b2), else e b1 (x) b2
//   f(b1 (x) b2) = b1 (x) f b2  if eps(b1) <  phi(b2), else f b1 (x) b2
// with the string lengths of a prefix P and the next letter a folding as
//   phi(P (x) a) = max(phi P, phi P + phi a - eps P)
//   eps(P (x) a) = max(eps a, eps P + eps a - phi a).
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace supercrystal {

enum class Dir { e, f };

namespace detail {

/// Position of the letter the operator acts on; `strings(x)` returns
/// (eps, phi) of one letter. Requires a nonempty word.
template <class Elem, class Strings>
std::size_t tensor_target(Dir dir, const std::vector<Elem>& word, Strings strings) {
  const std::size_t m = word.size();
  std::vector<std::pair<int, int>> letter(m);
  std::vector<int> eps(m), phi(m);
  for (std::size_t j = 0; j < m; ++j) letter[j] = strings(word[j]);
  eps[0] = letter[0].first;
  phi[0] = letter[0].second;
  for (std::size_t j = 1; j < m; ++j) {
    const auto [ea, fa] = letter[j];
    phi[j] = std::max(phi[j - 1], phi[j - 1] + fa - eps[j - 1]);
    eps[j] = std::max(ea, eps[j - 1] + ea - fa);
  }
  for (std::size_t j = m; j-- > 1;) {
    const int phi_a = letter[j].second;
    if (dir == Dir::e ? eps[j - 1] <= phi_a : eps[j - 1] < phi_a) return j;
  }
  return 0;
}

/// `apply(x)` returns the letter image or nullopt.
template <class Elem, class Strings, class Apply>
std::optional<std::vector<Elem>> tensor_apply(Dir dir, const std::vector<Elem>& word, Strings strings,
                                              Apply apply) {
  if (word.empty()) return std::nullopt;
  const std::size_t target = tensor_target(dir, word, strings);
  auto image = apply(word[target]);
  if (!image) return std::nullopt;
  std::vector<Elem> out = word;
  out[target] = *image;
  return out;
}

/// (eps, phi) of a whole word.
template <class Elem, class Strings>
std::pair<int, int> tensor_strings(const std::vector<Elem>& word, Strings strings) {
  int eps = 0, phi = 0;
  bool first = true;
  for (const auto& x : word) {
    const auto [ea, fa] = strings(x);
    if (first) {
      eps = ea;
      phi = fa;
      first = false;
      continue;
    }
    const int new_phi = std::max(phi, phi + fa - eps);
    const int new_eps = std::max(ea, eps + ea - fa);
    eps = new_eps;
    phi = new_phi;
  }
  return {eps, phi};
}

}  // namespace detail
}  // namespace supercrystal
