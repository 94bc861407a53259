// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "supercrystal/decomposition.hpp"
#include "supercrystal/examples.hpp"
#include "supercrystal/module_realization.hpp"

using namespace supercrystal;

namespace {

// Runtime limits in seconds.
constexpr double kLimitClassicalCase = 5.0;
constexpr double kLimitKoga = 10.0;
constexpr double kLimitRankTwoExample = 60.0;
constexpr double kLimitSpinOmega0Example = 300.0;
constexpr double kLimitRelations = 120.0;

// Fixture sizes.
constexpr int kSpinSpinCap = 6;
constexpr int kOmega0Cap = 10;
constexpr int kZeroArrowCap = 6;
constexpr int kRankTwoCap = 12;
constexpr int kSpinOmega0Cap = 8;
constexpr int kAxiomCap = 8;
constexpr int kRelationLevel = 8;
constexpr int kStabilityStep = 2;
constexpr int kRankTwoFamilies = 16;
constexpr int kSpinOmega0Families = 25;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

class Criterion {
 public:
  void fail(const std::string& why) {
    if (pass_) first_ = why;
    pass_ = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  bool pass() const { return pass_; }
  const std::string& reason() const { return first_; }

 private:
  bool pass_ = true;
  std::string first_;
};

std::string describe(const CompareReport& r) {
  std::ostringstream os;
  os << r.missing.size() << " missing, " << r.extra.size() << " extra, " << r.multiplicity_mismatches.size()
     << " multiplicity mismatches";
  return os.str();
}

std::string describe(const LabelDiff& d, const AlgebraType& type) {
  std::ostringstream os;
  os << d.missing.size() << " missing, " << d.extra.size() << " extra";
  if (!d.missing.empty()) os << " (first missing " << d.missing.front().to_string(type) << ")";
  if (!d.extra.empty()) os << " (first extra " << d.extra.front().to_string(type) << ")";
  return os.str();
}

std::vector<AlgebraType> types(Family f, std::initializer_list<int> ranks) {
  std::vector<AlgebraType> out;
  for (int n : ranks) out.emplace_back(f, n);
  return out;
}

std::vector<SpinClass> classes(const AlgebraType& t) {
  if (t.family() == Family::D) return {SpinClass::plus, SpinClass::minus};
  return {SpinClass::plus};
}

SuperFactor spin_factor(const AlgebraType& t, SpinClass c) {
  return c == SpinClass::plus ? SuperFactor::spin(t) : SuperFactor::spin_minus(t);
}

Character restrict_character(const Character& ch, int cap) {
  Character out;
  for (const auto& [w, c] : ch)
    if (w.n0() <= cap) out[w] = c;
  return out;
}

std::vector<Weight> restrict_summands(const std::vector<Weight>& v, int cap) {
  std::vector<Weight> out;
  for (const auto& w : v)
    if (w.n0() <= cap) out.push_back(w);
  return out;
}

// Super character of the classical component B(Lambda; level): each classical
// weight Lambda + sum m_i alpha_i sits at the lowest super weight plus sum m_i alpha_i.
Character component_character(const SuperComponentLabel& label, const AlgebraType& type) {
  Character out;
  const Weight lowest = lift(label.classical_lowest, label.level);
  for (const auto& [w, c] : realize_classical_crystal(label.classical_lowest, type).character()) {
    const std::vector<int> m = classical_root_expansion(w - label.classical_lowest, type);
    Weight s = lowest;
    for (int i = 1; i <= type.rank(); ++i) s += m[static_cast<std::size_t>(i - 1)] * simple_root_weight(type, i);
    out[s] += c;
  }
  return out;
}

// The decompositions behind criteria 4, 7 and 8, keyed by cap.
struct DecompositionFixture {
  std::string name;
  AlgebraType type;
  std::vector<SuperFactor> factors;
  int cap;
  LowestSearch search;
  std::function<DecompositionSummary(int)> predicted;
};

std::vector<DecompositionFixture> decomposition_fixtures() {
  std::vector<DecompositionFixture> out;
  for (Family f : {Family::D, Family::B})
    for (const auto& t : types(f, {2, 3, 4}))
      for (SpinClass c : classes(t))
        out.push_back({t.name() + (c == SpinClass::plus ? " spin x spin" : " spin x spin_minus"), t,
                       {SuperFactor::spin(t), spin_factor(t, c)}, kSpinSpinCap, LowestSearch::seeded,
                       [t, c](int cap) { return spin_spin_formula(t, c, cap); }});
  for (const auto& [ex, cap] : {std::pair{example_rank_two(), kRankTwoCap}, std::pair{example_spin_omega0(), kSpinOmega0Cap}}) {
    out.push_back({ex.type.name() + " worked example", ex.type,
                   {SuperFactor::irreducible(ex.first, ex.type), SuperFactor::irreducible(ex.second, ex.type)}, cap,
                   LowestSearch::exhaustive, [ex](int c) { return summary_from_summands(ex.summands(c), ex.type, c); }});
  }
  return out;
}

// ---- criteria ---------------------------------------------------------------

Criterion criterion1() {
  Criterion r;
  std::vector<AlgebraType> all = types(Family::D, {3, 4, 5});
  for (const auto& t : types(Family::B, {2, 3, 4})) all.push_back(t);
  for (const auto& t : all)
    for (SpinClass c : classes(t)) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto comps = decompose_classical_tensor({ClassicalCrystal::spin(t), ClassicalCrystal::spin(t, c)});
      std::vector<ClassicalWeight> observed;
      for (const auto& comp : comps) observed.push_back(comp.label.lowest_weight);
      std::sort(observed.begin(), observed.end());
      const double s = seconds_since(t0);
      r.expect(observed == classical_spin_spin_formula(t, c), t.name() + ": component lowest weights differ");
      r.expect(s < kLimitClassicalCase, t.name() + ": runtime " + std::to_string(s) + " s");
    }
  return r;
}

Criterion criterion2() {
  Criterion r;
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<AlgebraType> all = types(Family::D, {3, 4, 5});
  for (const auto& t : types(Family::B, {2, 3, 4})) all.push_back(t);
  for (const auto& t : all)
    for (SpinClass c : classes(t)) {
      const ClassicalCrystal first = ClassicalCrystal::spin(t), second = ClassicalCrystal::spin(t, c);
      const auto [membership, comps] = classical_components_with_membership({first, second});
      std::size_t idx = 0;
      for (const auto& u : first.vertices())
        for (const auto& v : second.vertices()) {
          const ClassicalWeight expected = comps[membership[idx++]].label.lowest_weight;
          try {
            if (koga_component(u[0], v[0], t).lowest_weight != expected)
              r.fail(t.name() + ": " + u[0].to_string() + " x " + v[0].to_string() + " misclassified");
          } catch (const std::exception& e) {
            r.fail(t.name() + ": " + e.what());
          }
        }
    }
  const double s = seconds_since(t0);
  r.expect(s < kLimitKoga, "runtime " + std::to_string(s) + " s");
  return r;
}

Criterion criterion3() {
  Criterion r;
  std::vector<std::pair<std::string, SuperGraph>> graphs;
  for (Family f : {Family::D, Family::B})
    for (const auto& t : types(f, {2, 3, 4})) {
      for (SpinClass c : classes(t)) {
        graphs.emplace_back(t.name() + " spin", SuperGraph(t, spin_factor(t, c).vertices(kAxiomCap)));
        graphs.emplace_back(t.name() + " spin x spin",
                            SuperGraph(t, product_vertices({SuperFactor::spin(t), spin_factor(t, c)}, kAxiomCap)));
      }
      graphs.emplace_back(t.name() + " omega0", SuperGraph(t, SuperFactor::omega0(t).vertices(kAxiomCap)));
    }
  for (const auto& ex : {example_rank_two(), example_spin_omega0()})
    graphs.emplace_back(ex.type.name() + " worked example",
                        SuperGraph(ex.type, product_vertices({SuperFactor::irreducible(ex.first, ex.type),
                                                              SuperFactor::irreducible(ex.second, ex.type)},
                                                             kAxiomCap)));
  for (const auto& [name, g] : graphs) {
    const auto v = check_crystal_axioms(g);
    if (!v.empty()) r.fail(name + ": " + v.front());
  }
  return r;
}

Criterion criterion4() {
  Criterion r;
  for (const auto& fx : decomposition_fixtures()) {
    if (fx.cap != kSpinSpinCap) continue;
    const auto seeded = decompose_super(fx.factors, fx.cap, LowestSearch::seeded);
    const auto exhaustive = decompose_super(fx.factors, fx.cap, LowestSearch::exhaustive);
    const CompareReport c = compare(fx.predicted(fx.cap), seeded.summary);
    r.expect(c.missing.empty() && c.extra.empty(), fx.name + ": " + describe(c));
    r.expect(seeded.summary.summands == exhaustive.summary.summands, fx.name + ": exhaustive search disagrees");
  }
  return r;
}

Criterion criterion5() {
  Criterion r;
  std::vector<AlgebraType> all = types(Family::D, {3, 4});
  for (const auto& t : types(Family::B, {2, 3})) all.push_back(t);
  for (const auto& t : all) {
    const LabeledCrystal lc = build_omega0(t, kOmega0Cap);
    const LabelDiff d = compare_labels(omega0_formula(t, kOmega0Cap), observed_labels(lc.components, kOmega0Cap));
    r.expect(d.match(), t.name() + ": " + describe(d, t));
  }
  return r;
}

Criterion criterion6() {
  Criterion r;
  const AlgebraType t(Family::D, 4);
  const SuperGraph g = spin_spin_graph(t, false, kZeroArrowCap);
  const ZeroArrowReport z = zero_arrow_relations(g, label_super_components(g), 1);
  r.expect(z.edge_count > 0, "no 0-arrows observed");
  for (const auto& a : z.relations)
    r.expect(zero_arrow_allowed(a, t), "unexpected arrow " + a.source.to_string(t) + " -> " + a.target.to_string(t));
  r.expect(z.right_with_positive_first_level == 0,
           std::to_string(z.right_with_positive_first_level) + " right arrows with positive first-factor level");
  return r;
}

Criterion example_criterion(const WorkedExample& ex, int cap, int families_per_block, int blocks, double limit) {
  Criterion r;
  r.expect(ex.family_count() == families_per_block * blocks, "family count " + std::to_string(ex.family_count()));
  const auto t0 = std::chrono::steady_clock::now();
  const auto observed = decompose_super(
      {SuperFactor::irreducible(ex.first, ex.type), SuperFactor::irreducible(ex.second, ex.type)}, cap,
      LowestSearch::exhaustive);
  const CompareReport c = compare(summary_from_summands(ex.summands(cap), ex.type, cap), observed.summary);
  const double s = seconds_since(t0);
  r.expect(c.missing.empty() && c.extra.empty(), describe(c));
  r.expect(s < limit, "runtime " + std::to_string(s) + " s");
  return r;
}

Criterion criterion7() { return example_criterion(example_rank_two(), kRankTwoCap, kRankTwoFamilies, 4, kLimitRankTwoExample); }

Criterion criterion8() {
  return example_criterion(example_spin_omega0(), kSpinOmega0Cap, kSpinOmega0Families, 1, kLimitSpinOmega0Example);
}

Criterion criterion9() {
  Criterion r;
  const auto t0 = std::chrono::steady_clock::now();
  for (Family f : {Family::D, Family::B})
    for (const auto& t : types(f, {2, 3, 4})) {
      const SpinModule m(t, kRelationLevel);
      for (const auto& [name, rep] : {std::pair{"relations", check_relations(m)},
                                      std::pair{"contravariance", check_polarization_contravariance(m)},
                                      std::pair{"lattice", check_crystal_lattice(m)}}) {
        if (!rep.pass())
          r.fail(t.name() + " " + name + ": " + rep.failures.front().relation + " at v" +
                 rep.failures.front().basis_label + ", defect " + rep.failures.front().defect);
        r.expect(rep.checks > 0, t.name() + " " + name + ": nothing checked");
      }
      // Exact coefficients in the variable q_0 (q for D, q^2 for B).
      const int p = default_conventions(t).q0_power;
      const LaurentRational q0 = LaurentRational::q_power(p);
      const LaurentRational one(1);
      std::size_t probes = 0;
      for (const Atom& minus : m.basis()) {
        if (!(minus.signs.minus & 1U) || minus.level + 1 > kRelationLevel) continue;
        const int k = minus.level;
        const Atom plus{SpinElement{minus.signs.n, minus.signs.minus & ~1U}, k + 1};
        const ModuleVector e0 = m.act(Generator::e(0), minus);
        r.expect(e0 == q0.pow(-k) * ModuleVector::basis(plus), t.name() + ": e0 coefficient at level " + std::to_string(k));
        const ModuleVector f0 = m.act(Generator::f(0), plus);
        const LaurentRational expected = (q0.pow(2 * k + 2) - one) / (q0.pow(2) - one);
        r.expect(f0 == expected * ModuleVector::basis(minus), t.name() + ": f0 coefficient at level " + std::to_string(k + 1));
        ++probes;
      }
      r.expect(probes > 0, t.name() + ": no coefficient probes");
      LaurentRational norm(1);
      for (int k = 0; k <= kRelationLevel; ++k) {
        if (k > 0) norm *= (q0.pow(2 * k) - one) / (q0.pow(2) - one);
        r.expect(m.norm(k) == norm, t.name() + ": norm at level " + std::to_string(k));
      }
    }
  const double s = seconds_since(t0);
  r.expect(s < kLimitRelations, "runtime " + std::to_string(s) + " s");
  return r;
}

Criterion criterion10() {
  Criterion r;
  // Classical spin (x) spin.
  for (Family f : {Family::D, Family::B})
    for (const auto& t : types(f, {2, 3, 4, 5}))
      for (SpinClass c : classes(t)) {
        const ClassicalCrystal a = ClassicalCrystal::spin(t), b = ClassicalCrystal::spin(t, c);
        std::map<ClassicalWeight, long> product;
        for (const auto& [wa, ca] : a.character())
          for (const auto& [wb, cb] : b.character()) product[wa + wb] += ca * cb;
        std::map<ClassicalWeight, long> sum;
        for (const auto& L : classical_spin_spin_formula(t, c))
          for (const auto& [w, k] : realize_classical_crystal(L, t).character()) sum[w] += k;
        r.expect(product == sum, t.name() + ": classical character identity");
      }
  // Super decompositions: predicted summands and observed lowest vertices.
  for (const auto& fx : decomposition_fixtures()) {
    const auto observed = decompose_super(fx.factors, fx.cap, fx.search).summary;
    const CompareReport predicted = compare(fx.predicted(fx.cap), observed);
    r.expect(predicted.multiplicity_mismatches.empty(), fx.name + ": predicted " + describe(predicted));
    const DecompositionSummary from_lowest = summary_from_summands(observed.summands, fx.type, fx.cap);
    r.expect(from_lowest.multiplicity == observed.multiplicity, fx.name + ": observed summands miss weights");
  }
  // B(omega_0): classical components placed at their levels.
  std::vector<AlgebraType> all = types(Family::D, {3, 4});
  for (const auto& t : types(Family::B, {2, 3})) all.push_back(t);
  for (const auto& t : all) {
    Character sum;
    for (const auto& label : omega0_formula(t, kOmega0Cap))
      for (const auto& [w, c] : component_character(label, t)) sum[w] += c;
    r.expect(restrict_character(sum, kOmega0Cap) == SuperFactor::omega0(t).character(kOmega0Cap),
             t.name() + ": B(omega0) character identity");
  }
  return r;
}

Criterion criterion11() {
  Criterion r;
  for (const auto& fx : decomposition_fixtures()) {
    const auto base = decompose_super(fx.factors, fx.cap, fx.search).summary;
    const auto wide = decompose_super(fx.factors, fx.cap + kStabilityStep, fx.search).summary;
    r.expect(restrict_character(wide.multiplicity, fx.cap) == base.multiplicity, fx.name + ": multiplicities moved");
    r.expect(restrict_summands(wide.summands, fx.cap) == base.summands, fx.name + ": summands moved");
    const CompareReport c = compare(fx.predicted(fx.cap + kStabilityStep), wide);
    r.expect(c.match(), fx.name + " at cap + 2: " + describe(c));
  }
  std::vector<AlgebraType> all = types(Family::D, {3, 4});
  for (const auto& t : types(Family::B, {2, 3})) all.push_back(t);
  for (const auto& t : all) {
    const auto base = observed_labels(build_omega0(t, kOmega0Cap).components, kOmega0Cap);
    const auto wide = observed_labels(build_omega0(t, kOmega0Cap + kStabilityStep).components, kOmega0Cap);
    r.expect(base == wide, t.name() + ": B(omega0) labels moved");
    r.expect(restrict_character(SuperFactor::omega0(t).character(kOmega0Cap + kStabilityStep), kOmega0Cap) ==
                 SuperFactor::omega0(t).character(kOmega0Cap),
             t.name() + ": B(omega0) character moved");
  }
  const AlgebraType t(Family::D, 4);
  auto arrows = [&](int cap, int keep) {
    const SuperGraph g = spin_spin_graph(t, false, cap);
    std::vector<ZeroArrow> out;
    for (const auto& a : zero_arrow_relations(g, label_super_components(g), 1).relations)
      if (a.source.level <= keep) out.push_back(a);
    return out;
  };
  r.expect(arrows(kZeroArrowCap, kZeroArrowCap) == arrows(kZeroArrowCap + kStabilityStep, kZeroArrowCap),
           "0-arrow relations moved");
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Criterion()>>> criteria = {
      {"classical spin x spin decomposition", criterion1},
      {"tableau classification of spin x spin", criterion2},
      {"crystal axioms on truncated crystals", criterion3},
      {"super spin x spin decomposition", criterion4},
      {"B(omega0) component structure", criterion5},
      {"0-arrow relations", criterion6},
      {"tensor product theorem, D(2,1) example", criterion7},
      {"tensor product theorem, D(4,1) example", criterion8},
      {"module relations, polarization, crystal lattice", criterion9},
      {"character identity", criterion10},
      {"truncation stability", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    std::ostringstream line;
    line << (c.pass() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
         << std::fixed;
    line.precision(2);
    line << s << " s)";
    if (!c.pass()) line << " -- " << c.reason();
    std::cout << line.str() << std::endl;
    if (!c.pass()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
