#include "supercrystal/decomposition.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

namespace supercrystal {

DecompositionSummary summary_from_summands(std::vector<Weight> summands, const AlgebraType& type, int cap) {
  DecompositionSummary s;
  s.cap = cap;
  s.complete_below = cap;
  std::erase_if(summands, [&](const Weight& w) { return w.n0() > cap; });
  std::sort(summands.begin(), summands.end());
  std::map<Weight, Character> cache;
  for (const auto& w : summands) {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, SuperFactor::irreducible(w, type).character(cap)).first;
    for (const auto& [wt, c] : it->second) s.multiplicity[wt] += c;
  }
  s.summands = std::move(summands);
  return s;
}

std::vector<ClassicalWeight> classical_spin_spin_formula(const AlgebraType& type, SpinClass second) {
  const int n = type.rank();
  if (type.family() == Family::B && second == SpinClass::minus)
    throw std::invalid_argument("family B has a single spin module");
  std::vector<ClassicalWeight> out;
  const int want = second == SpinClass::plus ? 0 : 1;
  for (int k = 0; k <= n; ++k)
    if (type.family() == Family::B || (n - k) % 2 == want) out.push_back(-1 * xi(type, k));
  std::sort(out.begin(), out.end());
  return out;
}

DecompositionSummary spin_spin_formula(const AlgebraType& type, SpinClass second, int cap) {
  if (cap < 0) throw std::invalid_argument("cap must be non-negative");
  const int n = type.rank();
  if (type.family() == Family::B && second == SpinClass::minus)
    throw std::invalid_argument("family B has a single spin module");
  std::vector<Weight> out;
  auto su = [&](const ClassicalWeight& cl) { return lift(cl, 0); };
  if (type.family() == Family::B) {
    for (int k = 1; k <= n; ++k) out.push_back(su(-1 * xi(type, k)));
    for (int l = 0; l + 1 <= cap; ++l) out.push_back((l + 1) * Weight::fundamental(n, 0));
    return summary_from_summands(std::move(out), type, cap);
  }
  // Component lowest vectors (+^N)_0 (x) (+^k -^{N-k})_l; the second atom's
  // module fixes the parity of k (and of l for k = 0).
  const int want = second == SpinClass::plus ? 0 : 1;
  for (int k = 1; k <= n; ++k)
    if ((n - k) % 2 == want) out.push_back(su(-1 * xi(type, k)));
  for (int l = 0; l + 1 <= cap; ++l)
    if ((n + l) % 2 == want) out.push_back((l + 1) * Weight::fundamental(n, 0));
  return summary_from_summands(std::move(out), type, cap);
}

std::vector<ClassicalWeight> omega0_nu_set(const AlgebraType& type) {
  std::vector<ClassicalWeight> w;
  for (int k = 0; k <= type.rank(); ++k) w.push_back(-1 * xi(type, k));
  if (type.family() == Family::D) w.push_back(-1 * xi(type, type.rank(), true));
  return w;
}

std::vector<int> omega0_z_values(const ClassicalWeight& nu, const AlgebraType& type) {
  const int n = type.rank();
  for (int k = 0; k <= n; ++k) {
    const bool is_k = nu == -1 * xi(type, k);
    const bool is_prime = type.family() == Family::D && k == n && nu == -1 * xi(type, k, true);
    if (!is_k && !is_prime) continue;
    if (type.family() == Family::B) {
      if (k == 0) return {1, 2 * n + 2};
      return {k, 2 * n - k + 1};
    }
    if (k == 0) return {1, 2 * n + 1};
    if (k < n) return {k, 2 * n - k};
    return {n};
  }
  throw std::invalid_argument("weight is not in W: " + nu.to_string());
}

std::vector<SuperComponentLabel> omega0_formula(const AlgebraType& type, int cap) {
  std::vector<SuperComponentLabel> out;
  for (const auto& nu : omega0_nu_set(type))
    for (int z : omega0_z_values(nu, type))
      for (int l = z; l <= cap; l += 2) out.push_back({nu, l});
  std::sort(out.begin(), out.end());
  return out;
}

int a_value(const ClassicalWeight& mu, const ClassicalWeight& first, const ClassicalWeight& second,
            const AlgebraType& type) {
  const std::vector<int> c = classical_root_expansion(mu - first - second, type);
  for (int x : c)
    if (x < 0) throw std::domain_error("component weight is not above the tensor lowest weight");
  if (type.family() == Family::D && type.rank() == 2) return c[0] + c[1];
  return c[0];
}

namespace {

struct LrTerm {
  ClassicalWeight mu;
  int a = 0;
};

// Components of B(first) (x) B(second) with their a-values.
std::vector<LrTerm> lr_terms(const ClassicalWeight& first, const ClassicalWeight& second, const AlgebraType& type) {
  std::vector<LrTerm> out;
  const auto comps = decompose_classical_tensor(
      {realize_classical_crystal(first, type), realize_classical_crystal(second, type)});
  for (const auto& c : comps) out.push_back({c.label.lowest_weight, a_value(c.label.lowest_weight, first, second, type)});
  return out;
}

}  // namespace

std::vector<SuperComponentLabel> typical_structure_formula(const Weight& lambda, const AlgebraType& type, int cap) {
  if (lambda.n0() < 1) throw std::invalid_argument("typical structure needs n0 >= 1");
  const ClassicalWeight lcl = classical_restriction(lambda);
  const int shift = lambda.n0() - 1;
  std::vector<SuperComponentLabel> out;
  for (const auto& nu : omega0_nu_set(type)) {
    const auto terms = lr_terms(nu, lcl, type);
    for (int z : omega0_z_values(nu, type))
      for (const auto& t : terms)
        for (int l = z + t.a + shift; l <= cap; l += 2) out.push_back({t.mu, l});
  }
  std::sort(out.begin(), out.end());
  return out;
}

DecompositionSummary main_theorem(const Weight& lambda_prime, const Weight& lambda, const AlgebraType& type, int cap) {
  if (lambda.n0() != 0 || lambda_prime.n0() != 0)
    throw std::invalid_argument("main_theorem takes lambda, lambda' with zero omega_0 coefficient");
  const ClassicalWeight lcl = classical_restriction(lambda), lpcl = classical_restriction(lambda_prime);
  std::vector<Weight> out;
  for (const auto& nu : omega0_nu_set(type)) {
    const auto inner = lr_terms(nu, lcl, type);
    for (const auto& mj : inner) {
      const auto outer = lr_terms(lpcl, mj.mu, type);
      for (int z : omega0_z_values(nu, type))
        for (const auto& mk : outer)
          for (int l = z + mj.a + mk.a + 1; l <= cap; l += 2) out.push_back(lift(mk.mu, l));
    }
  }
  return summary_from_summands(std::move(out), type, cap);
}

CompareReport compare(const DecompositionSummary& predicted, const DecompositionSummary& observed) {
  if (predicted.cap != observed.cap) throw std::invalid_argument("compare needs equal caps");
  const int bound = std::min(predicted.complete_below, observed.complete_below);
  auto restrict = [&](const std::vector<Weight>& v) {
    std::vector<Weight> r;
    for (const auto& w : v)
      if (w.n0() <= bound) r.push_back(w);
    std::sort(r.begin(), r.end());
    return r;
  };
  const auto p = restrict(predicted.summands), o = restrict(observed.summands);
  CompareReport report;
  std::set_difference(p.begin(), p.end(), o.begin(), o.end(), std::back_inserter(report.missing));
  std::set_difference(o.begin(), o.end(), p.begin(), p.end(), std::back_inserter(report.extra));
  std::set<Weight> keys;
  for (const auto& [w, c] : predicted.multiplicity)
    if (w.n0() <= bound) keys.insert(w);
  for (const auto& [w, c] : observed.multiplicity)
    if (w.n0() <= bound) keys.insert(w);
  auto get = [](const Character& ch, const Weight& w) {
    auto it = ch.find(w);
    return it == ch.end() ? 0L : it->second;
  };
  for (const auto& w : keys) {
    const long a = get(predicted.multiplicity, w), b = get(observed.multiplicity, w);
    if (a != b) report.multiplicity_mismatches.push_back({w, a, b});
  }
  return report;
}

LabelDiff compare_labels(std::vector<SuperComponentLabel> predicted, std::vector<SuperComponentLabel> observed) {
  std::sort(predicted.begin(), predicted.end());
  std::sort(observed.begin(), observed.end());
  LabelDiff d;
  std::set_difference(predicted.begin(), predicted.end(), observed.begin(), observed.end(),
                      std::back_inserter(d.missing));
  std::set_difference(observed.begin(), observed.end(), predicted.begin(), predicted.end(),
                      std::back_inserter(d.extra));
  return d;
}

std::vector<SuperComponentLabel> observed_labels(const LabeledComponents& comps, int cap) {
  std::vector<SuperComponentLabel> out;
  for (const auto& l : comps.labels)
    if (l.level <= cap) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}


std::optional<XiIndex> xi_index(const ClassicalWeight& Lambda, const AlgebraType& type) {
  for (int k = 0; k <= type.rank(); ++k)
    if (Lambda == -1 * xi(type, k)) return XiIndex{k, false};
  if (type.family() == Family::D && Lambda == -1 * xi(type, type.rank(), true)) return XiIndex{type.rank(), true};
  return std::nullopt;
}

bool zero_arrow_allowed(const ZeroArrow& arrow, const AlgebraType& type) {
  const auto s = xi_index(arrow.source.classical_lowest, type);
  const auto t = xi_index(arrow.target.classical_lowest, type);
  if (!s || !t) return false;
  const int n = type.rank();
  const bool d = type.family() == Family::D;
  const int ls = arrow.source.level, lt = arrow.target.level;
  const int ks = s->k, kt = t->k;
  if (arrow.side == Side::R) {
    if (s->prime || t->prime) return false;
    if (ks >= 2 && kt == ks - 1 && lt == ls - 1) return true;
    return ks == 1 && kt == 0 && lt == ls;
  }
  if (ks == 0) return kt == 1 && !t->prime && lt == ls - 2;
  if (lt != ls - 1) return false;
  const int top = d ? n - 1 : n;
  if (!s->prime && !t->prime && ks + 1 <= top && kt == ks + 1) return true;
  if (d) {
    if (ks == n && kt == n - 1 && !t->prime) return true;
    if (ks == n - 1 && !s->prime && kt == n) return true;
    return false;
  }
  return ks == n && kt == n;
}

DecompositionSummary typical_product_formula(const Weight& lambda_prime, const Weight& lambda, const AlgebraType& type,
                                             int cap) {
  if (lambda.n0() < 1 || lambda_prime.n0() < 1)
    throw std::invalid_argument("typical_product_formula needs n0 >= 1 for both factors");
  const int shift = lambda.n0() + lambda_prime.n0() - 2;
  const int n = type.rank();
  std::vector<Weight> summands;
  if (cap - shift >= 0) {
    const auto base = main_theorem(lift(classical_restriction(lambda_prime), 0), lift(classical_restriction(lambda), 0),
                                   type, cap - shift);
    for (const auto& w : base.summands) summands.push_back(w + shift * Weight::fundamental(n, 0));
  }
  return summary_from_summands(std::move(summands), type, cap);
}

}  // namespace supercrystal
