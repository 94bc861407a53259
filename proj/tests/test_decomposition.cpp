#include <algorithm>

#include "doctest.h"
#include "supercrystal/decomposition.hpp"
#include "supercrystal/examples.hpp"

using namespace supercrystal;

namespace {
Weight w0(int n) { return Weight::fundamental(n, 0); }
Weight om(int n, int i) { return Weight::fundamental(n, i); }
std::vector<Weight> sorted(std::vector<Weight> v) {
  std::sort(v.begin(), v.end());
  return v;
}
ClassicalWeight L(int n, int i) { return ClassicalWeight::fundamental(n, i); }
}  // namespace

TEST_CASE("classical spin x spin formula") {
  const AlgebraType d4(Family::D, 4), d3(Family::D, 3), b3(Family::B, 3);
  std::vector<ClassicalWeight> e = {-1 * xi(d4, 0), -1 * xi(d4, 2), -1 * xi(d4, 4)};
  std::sort(e.begin(), e.end());
  CHECK(classical_spin_spin_formula(d4, SpinClass::plus) == e);
  e = {-1 * xi(d3, 0), -1 * xi(d3, 2)};
  std::sort(e.begin(), e.end());
  CHECK(classical_spin_spin_formula(d3, SpinClass::minus) == e);
  CHECK(classical_spin_spin_formula(b3, SpinClass::plus).size() == 4);
}

TEST_CASE("super spin x spin formula") {
  // D(4,1), cap 5.
  CHECK(spin_spin_formula(AlgebraType(Family::D, 4), SpinClass::plus, 5).summands ==
        sorted({-2 * om(4, 4), -1 * om(4, 2), w0(4), 3 * w0(4), 5 * w0(4)}));
  // B(3,1), cap 3.
  CHECK(spin_spin_formula(AlgebraType(Family::B, 3), SpinClass::plus, 3).summands ==
        sorted({-2 * om(3, 3), -1 * om(3, 1), -1 * om(3, 2), w0(3), 2 * w0(3), 3 * w0(3)}));
  // D(5,1), cap 6: plus x plus and plus x minus, both confirmed by the search below.
  CHECK(spin_spin_formula(AlgebraType(Family::D, 5), SpinClass::plus, 6).summands ==
        sorted({-2 * om(5, 5), -1 * om(5, 3), -1 * om(5, 1), 2 * w0(5), 4 * w0(5), 6 * w0(5)}));
  CHECK(spin_spin_formula(AlgebraType(Family::D, 5), SpinClass::minus, 6).summands ==
        sorted({-1 * om(5, 4) - om(5, 5), -1 * om(5, 2), w0(5), 3 * w0(5), 5 * w0(5)}));
  CHECK_THROWS(spin_spin_formula(AlgebraType(Family::B, 3), SpinClass::minus, 3));
}

TEST_CASE("super spin x spin formula matches the search") {
  for (Family f : {Family::D, Family::B})
    for (int n = 2; n <= 5; ++n) {
      const AlgebraType t(f, n);
      for (SpinClass c : {SpinClass::plus, SpinClass::minus}) {
        if (f == Family::B && c == SpinClass::minus) continue;
        CAPTURE(t.name());
        const SuperFactor second = c == SpinClass::plus ? SuperFactor::spin(t) : SuperFactor::spin_minus(t);
        const auto d = decompose_super({SuperFactor::spin(t), second}, 6);
        CHECK(compare(spin_spin_formula(t, c, 6), d.summary).match());
      }
    }
}

TEST_CASE("omega_0 z-values") {
  const AlgebraType d4(Family::D, 4), b2(Family::B, 2), b3(Family::B, 3);
  CHECK(omega0_z_values(-1 * xi(d4, 1), d4) == std::vector<int>{1, 7});
  CHECK(omega0_z_values(-1 * xi(d4, 0), d4) == std::vector<int>{1, 9});
  CHECK(omega0_z_values(-1 * xi(d4, 4), d4) == std::vector<int>{4});
  CHECK(omega0_z_values(-1 * xi(d4, 4, true), d4) == std::vector<int>{4});
  CHECK(omega0_z_values(-1 * xi(b2, 2), b2) == std::vector<int>{2, 3});
  for (int k = 1; k <= 3; ++k) CHECK(omega0_z_values(-1 * xi(b3, k), b3) == std::vector<int>{k, 2 * 3 - k + 1});
}

TEST_CASE("B(omega_0) labels match the formula") {
  for (Family f : {Family::D, Family::B})
    for (int n = 2; n <= 4; ++n) {
      const AlgebraType t(f, n);
      CAPTURE(t.name());
      const auto lc = build_omega0(t, 8);
      CHECK(compare_labels(omega0_formula(t, 8), observed_labels(lc.components, 8)).match());
    }
}

TEST_CASE("a-values") {
  const AlgebraType d4(Family::D, 4), d2(Family::D, 2);
  CHECK(a_value(-1 * L(4, 3), -1 * L(4, 4), -1 * xi(d4, 1), d4) == 1);
  CHECK(a_value(-1 * L(4, 1) - L(4, 4), -1 * L(4, 4), -1 * xi(d4, 1), d4) == 0);
  // D(2,1): B(-L1-L2) (x) B(-3L1-3L2) has components -(4-2j)L1-(4-2k)L2 with a = j + k.
  const ClassicalWeight first = -1 * L(2, 1) - L(2, 2), second = -3 * L(2, 1) - 3 * L(2, 2);
  for (int j = 0; j <= 1; ++j)
    for (int k = 0; k <= 1; ++k)
      CHECK(a_value(-(4 - 2 * j) * L(2, 1) - (4 - 2 * k) * L(2, 2), first, second, d2) == j + k);
  CHECK_THROWS_AS(a_value(-2 * L(4, 4) - L(4, 1) - L(4, 1), -1 * L(4, 4), -1 * L(4, 4), d4), std::domain_error);
}

TEST_CASE("typical structure formula matches the typical model") {
  for (Family f : {Family::D, Family::B})
    for (int n = 2; n <= 4; ++n) {
      const AlgebraType t(f, n);
      CAPTURE(t.name());
      std::vector<int> form(static_cast<std::size_t>(n) + 1, 0);
      form[0] = 1;
      form[static_cast<std::size_t>(n)] = 1;
      const Weight lambda = Weight::from_lowest_form(form);
      const SuperGraph g = typical_model(lambda, t, 6);
      CHECK(compare_labels(typical_structure_formula(lambda, t, 6), observed_labels(label_super_components(g), 6))
                .match());
    }
  // Trivial classical part reduces to B(omega_0).
  const AlgebraType d3(Family::D, 3);
  CHECK(typical_structure_formula(w0(3), d3, 7) == omega0_formula(d3, 7));
}

TEST_CASE("main theorem reproduces the worked examples") {
  const WorkedExample ex1 = example_rank_two();
  CHECK(ex1.family_count() == 64);
  const Weight p1 = ex1.first - w0(2), l1 = ex1.second - w0(2);
  CHECK(main_theorem(p1, l1, ex1.type, 12).summands == sorted(ex1.summands(12)));
  const WorkedExample ex2 = example_spin_omega0();
  CHECK(ex2.family_count() == 25);
  const Weight p2 = ex2.first - w0(4), l2 = ex2.second - w0(4);
  CHECK(main_theorem(p2, l2, ex2.type, 10).summands == sorted(ex2.summands(10)));
  // Two families of the D(4,1) example: B(-w4 + (2+2n) w0) and B(-3 w4 + (5+2n) w0).
  const auto s = ex2.summands(10);
  CHECK(std::count(s.begin(), s.end(), -1 * om(4, 4) + 2 * w0(4)) >= 1);
  CHECK(std::count(s.begin(), s.end(), -3 * om(4, 4) + 5 * w0(4)) >= 1);
}

TEST_CASE("main theorem for trivial classical parts matches the search") {
  for (Family f : {Family::D, Family::B})
    for (int n = 2; n <= 3; ++n) {
      const AlgebraType t(f, n);
      CAPTURE(t.name());
      const Weight zero = Weight::zero(n);
      const DecompositionSummary predicted = main_theorem(zero, zero, t, 7);
      for (const auto& w : predicted.summands) CHECK(w.n0() >= 1);
      const auto d = decompose_super({SuperFactor::omega0(t), SuperFactor::omega0(t)}, 7);
      CHECK(compare(predicted, d.summary).match());
    }
}

TEST_CASE("compare reports exactly the differing summand") {
  const AlgebraType d4(Family::D, 4);
  const DecompositionSummary observed = decompose_super({SuperFactor::spin(d4), SuperFactor::spin(d4)}, 6).summary;
  CHECK(compare(observed, observed).match());
  std::vector<Weight> fewer = observed.summands;
  fewer.erase(std::find(fewer.begin(), fewer.end(), -1 * om(4, 2)));
  const CompareReport r = compare(summary_from_summands(fewer, d4, 6), observed);
  CHECK(r.missing.empty());
  CHECK(r.extra == std::vector<Weight>{-1 * om(4, 2)});
  CHECK_FALSE(r.multiplicity_mismatches.empty());
  CHECK_THROWS(compare(spin_spin_formula(d4, SpinClass::plus, 5), observed));
}

TEST_CASE("summands account for every weight of the product") {
  const AlgebraType b3(Family::B, 3);
  const auto d = decompose_super({SuperFactor::spin(b3), SuperFactor::spin(b3)}, 6);
  CHECK(summary_from_summands(d.summary.summands, b3, 6).multiplicity == d.summary.multiplicity);
}

TEST_CASE("0-arrow rules") {
  const AlgebraType d4(Family::D, 4);
  auto label = [&](int k, int l, bool prime = false) { return SuperComponentLabel{-1 * xi(d4, k, prime), l}; };
  CHECK(zero_arrow_allowed({label(3, 4), label(2, 3), Side::R}, d4));
  CHECK(zero_arrow_allowed({label(1, 4), label(0, 4), Side::R}, d4));
  CHECK(zero_arrow_allowed({label(0, 5), label(1, 3), Side::L}, d4));
  CHECK(zero_arrow_allowed({label(4, 5, true), label(3, 4), Side::L}, d4));
  CHECK(zero_arrow_allowed({label(3, 5), label(4, 4, true), Side::L}, d4));
  CHECK_FALSE(zero_arrow_allowed({label(1, 4), label(2, 4), Side::R}, d4));
  CHECK_FALSE(zero_arrow_allowed({label(0, 5), label(1, 4), Side::L}, d4));
  const auto i = xi_index(-1 * xi(d4, 4, true), d4);
  REQUIRE(i.has_value());
  CHECK(i->k == 4);
  CHECK(i->prime);

  for (int n = 2; n <= 4; ++n)
    for (Family f : {Family::D, Family::B}) {
      const AlgebraType t(f, n);
      CAPTURE(t.name());
      const SuperGraph g = spin_spin_graph(t, false, 6);
      const auto z = zero_arrow_relations(g, label_super_components(g), 1);
      for (const auto& a : z.relations) CHECK(zero_arrow_allowed(a, t));
      CHECK(z.right_with_positive_first_level == 0);
    }
}
