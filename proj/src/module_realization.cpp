#include "supercrystal/module_realization.hpp"

#include <functional>
#include <sstream>

namespace supercrystal {

// ---- vectors ----------------------------------------------------------------

void ModuleVector::add(const Atom& a, const LaurentRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [a, c] : o.terms_) add(a, c);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [a, c] : o.terms_) add(a, -c);
  return *this;
}

ModuleVector operator*(const LaurentRational& c, const ModuleVector& v) {
  ModuleVector out;
  if (c.is_zero()) return out;
  for (const auto& [a, x] : v.terms_) out.terms_.emplace(a, c * x);
  return out;
}

int ModuleVector::max_level() const {
  int m = -1;
  for (const auto& [a, c] : terms_) m = std::max(m, a.level);
  return m;
}

std::string ModuleVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*v" << a.to_string();
  }
  return os.str();
}

std::string Generator::to_string() const {
  switch (kind) {
    case Kind::e: return "e" + std::to_string(index);
    case Kind::f: return "f" + std::to_string(index);
    case Kind::t: return "t" + std::to_string(index);
    case Kind::t_inverse: return "t" + std::to_string(index) + "^-1";
    case Kind::q_h: return "q^h" + std::to_string(index);
    case Kind::sigma: return "sigma";
  }
  return "?";
}

// ---- module -----------------------------------------------------------------

ModuleConventions default_conventions(const AlgebraType& type) {
  ModuleConventions c;
  c.q0_power = root_data(type).lvalues[0];
  return c;
}

SpinModule::SpinModule(AlgebraType type, int max_level, ModuleConventions conventions)
    : type_(type), max_level_(max_level), conventions_(conventions) {
  if (max_level < 0) throw std::invalid_argument("max level must be non-negative");
  const int n = type_.rank();
  for (int k = 0; k <= max_level_; ++k)
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
      const Atom a{SpinElement{n, m}, k};
      if (in_plus_spin_module(a, type_)) basis_.push_back(a);
    }
  std::sort(basis_.begin(), basis_.end());
}

LaurentRational SpinModule::q_i(int i) const {
  return LaurentRational::q_power(root_data(type_).lvalues[static_cast<std::size_t>(i)]);
}

LaurentRational SpinModule::q0_power(int k) const { return LaurentRational::q_power(conventions_.q0_power * k); }

LaurentRational SpinModule::norm(int level) const {
  LaurentRational out(1);
  const LaurentRational q0sq = q0_power(2);
  for (int j = 1; j <= level; ++j) out *= (q0_power(2 * j) - LaurentRational(1)) / (q0sq - LaurentRational(1));
  return out;
}

ModuleVector SpinModule::act_basis(const Generator& g, const Atom& a) const {
  const int n = type_.rank();
  if (g.kind != Generator::Kind::sigma && (g.index < 0 || g.index > n))
    throw std::out_of_range("generator index out of range: " + g.to_string());
  ModuleVector out;
  const Weight wt = atom_weight(a, type_);
  const int l = root_data(type_).lvalues[static_cast<std::size_t>(g.index)];
  auto emit = [&](const Atom& image, const LaurentRational& c) {
    if (c.is_zero()) return;
    if (image.level > max_level_) throw BoundaryError("image " + image.to_string() + " exceeds the truncation");
    out.add(image, c);
  };
  switch (g.kind) {
    case Generator::Kind::e:
    case Generator::Kind::f: {
      const Dir dir = g.kind == Generator::Kind::e ? Dir::e : Dir::f;
      const auto image = atom_kashiwara(dir, g.index, a, type_);
      if (!image) break;
      if (g.index != 0) {
        emit(*image, LaurentRational(1));
      } else if (dir == Dir::e) {
        emit(*image, q0_power(-a.level));
      } else {
        LaurentRational c = (q0_power(2 * a.level) - LaurentRational(1)) / (q0_power(2) - LaurentRational(1));
        if (conventions_.mutate_f0) c *= LaurentRational::q_power(1);
        emit(*image, c);
      }
      break;
    }
    case Generator::Kind::t: emit(a, LaurentRational::q_power(l * wt[static_cast<std::size_t>(g.index)])); break;
    case Generator::Kind::t_inverse:
      emit(a, LaurentRational::q_power(-l * wt[static_cast<std::size_t>(g.index)]));
      break;
    case Generator::Kind::q_h: emit(a, LaurentRational::q_power(wt[static_cast<std::size_t>(g.index)])); break;
    case Generator::Kind::sigma: emit(a, LaurentRational(a.level % 2 == 0 ? 1 : -1)); break;
  }
  return out;
}

ModuleVector SpinModule::act(const Generator& g, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [a, c] : v.terms()) out += c * act_basis(g, a);
  return out;
}

LaurentRational SpinModule::polarization(const ModuleVector& u, const ModuleVector& v) const {
  LaurentRational out;
  for (const auto& [a, c] : u.terms()) {
    auto it = v.terms().find(a);
    if (it != v.terms().end()) out += c * it->second * norm(a.level);
  }
  return out;
}

// ---- checkers ---------------------------------------------------------------

namespace {

class Recorder {
 public:
  Recorder(const SpinModule& m, RelationReport& r) : module_(m), report_(r) {}

  // Evaluates `defect` and records a failure when it is nonzero.
  void check(const std::string& relation, const Atom& label, const std::function<ModuleVector()>& defect) {
    try {
      const ModuleVector d = defect();
      ++report_.checks;
      if (!d.is_zero()) fail(relation, label, d.to_string());
    } catch (const BoundaryError&) {
      ++report_.boundary_skips;
    }
  }

  void fail(const std::string& relation, const Atom& label, const std::string& defect) {
    report_.failures.push_back({relation, module_.type().family(), module_.type().rank(), label.to_string(), defect});
  }

  void count() { ++report_.checks; }
  void skip() { ++report_.boundary_skips; }

 private:
  const SpinModule& module_;
  RelationReport& report_;
};

ModuleVector apply_word(const SpinModule& m, const std::vector<Generator>& word, ModuleVector v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = m.act(*it, v);
  return v;
}

}  // namespace

RelationReport check_relations(const SpinModule& m) {
  RelationReport report;
  Recorder rec(m, report);
  const AlgebraType& type = m.type();
  const int n = type.rank();
  const auto& rd = root_data(type);
  const auto a = cartan_matrix(type);
  using G = Generator;
  auto aij = [&](int i, int j) { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  auto parity = [&](int i) { return rd.parity[static_cast<std::size_t>(i)]; };
  auto lval = [&](int i) { return rd.lvalues[static_cast<std::size_t>(i)]; };

  for (const Atom& b : m.basis()) {
    const ModuleVector v = ModuleVector::basis(b);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        // t_i x_j = q^{+-l_i a_ij} x_j t_i
        for (const auto& x : {G::e(j), G::f(j)}) {
          const int sign = x.kind == G::Kind::e ? 1 : -1;
          rec.check("weight", b, [&] {
            return apply_word(m, {G::t(i), x}, v) -
                   LaurentRational::q_power(sign * lval(i) * aij(i, j)) * apply_word(m, {x, G::t(i)}, v);
          });
        }
        // e_i f_j - (-1)^{p(i)p(j)} f_j e_i = delta_ij (t_i - t_i^-1)/(q_i - q_i^-1)
        rec.check("ef-commutator", b, [&] {
          const LaurentRational s(parity(i) * parity(j) == 1 ? -1 : 1);
          ModuleVector d = apply_word(m, {G::e(i), G::f(j)}, v) - s * apply_word(m, {G::f(j), G::e(i)}, v);
          if (i == j) {
            const LaurentRational qi = m.q_i(i);
            const LaurentRational k = (qi - qi.inverse()).inverse();
            d -= k * (m.act(G::t(i), v) - m.act(G::t_inverse(i), v));
          }
          return d;
        });
        // Serre relations for even i
        if (i >= 1 && j != i) {
          const int len = 1 - aij(i, j);
          for (const auto kind : {G::Kind::e, G::Kind::f}) {
            rec.check("serre", b, [&] {
              ModuleVector d;
              for (int r = 0; r <= len; ++r) {
                std::vector<G> word(static_cast<std::size_t>(len - r), G{kind, i});
                word.push_back(G{kind, j});
                word.insert(word.end(), static_cast<std::size_t>(r), G{kind, i});
                const LaurentRational c = q_binomial(len, r, m.q_i(i)) * LaurentRational(r % 2 == 0 ? 1 : -1);
                d += c * apply_word(m, word, v);
              }
              return d;
            });
          }
        }
      }
      // sigma x sigma = (-1)^{p(i)} x
      for (const auto& x : {G::e(i), G::f(i)}) {
        rec.check("parity", b, [&] {
          const LaurentRational s(parity(i) == 1 ? -1 : 1);
          return apply_word(m, {G::sigma(), x, G::sigma()}, v) - s * m.act(x, v);
        });
      }
    }
    for (int i = 0; i <= n; ++i) {
      if (parity(i) != 1) continue;
      rec.check("nilpotent", b, [&] { return apply_word(m, {G::e(i), G::e(i)}, v); });
      rec.check("nilpotent", b, [&] { return apply_word(m, {G::f(i), G::f(i)}, v); });
    }
    rec.check("parity", b, [&] { return apply_word(m, {G::sigma(), G::sigma()}, v) - v; });
  }
  return report;
}

RelationReport check_polarization_contravariance(const SpinModule& m) {
  RelationReport report;
  Recorder rec(m, report);
  const int n = m.type().rank();
  const auto& basis = m.basis();
  using G = Generator;

  for (const Atom& b : basis) {
    const LaurentRational nb = m.norm(b.level);
    rec.count();
    if (!is_in_A(nb) || evaluate_at_zero(nb) != 1) rec.fail("norm", b, nb.to_string());
  }

  auto coefficient = [](const ModuleVector& v, const Atom& a) {
    auto it = v.terms().find(a);
    return it == v.terms().end() ? LaurentRational() : it->second;
  };

  for (int i = 0; i <= n; ++i) {
    const LaurentRational qi = m.q_i(i);
    for (const auto kind : {G::Kind::e, G::Kind::f}) {
      // eta(e_i) = q_i f_i t_i^-1, eta(f_i) = q_i^-1 t_i e_i
      const std::vector<G> eta = kind == G::Kind::e ? std::vector<G>{G::f(i), G::t_inverse(i)}
                                                    : std::vector<G>{G::t(i), G::e(i)};
      const LaurentRational eta_scale = kind == G::Kind::e ? qi : qi.inverse();
      std::vector<ModuleVector> xu(basis.size()), yv(basis.size());
      std::vector<char> ok_x(basis.size(), 1), ok_y(basis.size(), 1);
      for (std::size_t s = 0; s < basis.size(); ++s) {
        const ModuleVector v = ModuleVector::basis(basis[s]);
        try {
          xu[s] = m.act(G{kind, i}, v);
        } catch (const BoundaryError&) {
          ok_x[s] = 0;
        }
        try {
          yv[s] = eta_scale * apply_word(m, eta, v);
        } catch (const BoundaryError&) {
          ok_y[s] = 0;
        }
      }
      for (std::size_t s = 0; s < basis.size(); ++s)
        for (std::size_t t = 0; t < basis.size(); ++t) {
          if (!ok_x[s] || !ok_y[t]) {
            rec.skip();
            continue;
          }
          const LaurentRational lhs = coefficient(xu[s], basis[t]) * m.norm(basis[t].level);
          const LaurentRational rhs = coefficient(yv[t], basis[s]) * m.norm(basis[s].level);
          rec.count();
          if (!(lhs == rhs))
            rec.fail(std::string("contravariance ") + (kind == G::Kind::e ? "e" : "f") + std::to_string(i),
                     basis[s], "(" + (lhs - rhs).to_string() + ") against v" + basis[t].to_string());
        }
    }
  }
  return report;
}

RelationReport check_crystal_lattice(const SpinModule& m) {
  RelationReport report;
  Recorder rec(m, report);
  const AlgebraType& type = m.type();
  const int n = type.rank();
  using G = Generator;

  // Kashiwara operator on a basis vector; nullopt-free: the zero vector encodes 0.
  auto kashiwara = [&](Dir dir, int i, const Atom& b) -> ModuleVector {
    const ModuleVector v = ModuleVector::basis(b);
    if (i == 0) {
      if (dir == Dir::f) return m.act(G::f(0), v);
      const LaurentRational q0 = LaurentRational::q_power(m.conventions().q0_power);
      return q0.inverse() * m.act(G::t(0), m.act(G::e(0), v));
    }
    const G up = dir == Dir::e ? G::e(i) : G::f(i);
    const G back = dir == Dir::e ? G::f(i) : G::e(i);
    const ModuleVector y = m.act(up, v);
    if (y.is_zero()) return y;
    if (!m.act(up, y).is_zero()) throw std::logic_error("i-string longer than one");
    const ModuleVector z = m.act(back, y);
    auto it = z.terms().find(b);
    if (z.terms().size() != 1 || it == z.terms().end()) throw std::logic_error("string does not return to the vector");
    return it->second.inverse() * y;
  };

  for (const Atom& b : m.basis())
    for (int i = 0; i <= n; ++i)
      for (const Dir dir : {Dir::e, Dir::f}) {
        const std::string rel = std::string("lattice ") + (dir == Dir::e ? "e" : "f") + std::to_string(i);
        ModuleVector img;
        try {
          img = kashiwara(dir, i, b);
        } catch (const BoundaryError&) {
          rec.skip();
          continue;
        } catch (const std::logic_error& e) {
          rec.fail(rel, b, e.what());
          continue;
        }
        rec.count();
        const auto expected = atom_kashiwara(dir, i, b, type);
        if (!expected) {
          if (!img.is_zero()) rec.fail(rel, b, "expected 0, got " + img.to_string());
          continue;
        }
        if (img.terms().size() != 1 || img.terms().begin()->first != *expected) {
          rec.fail(rel, b, "expected v" + expected->to_string() + ", got " + img.to_string());
          continue;
        }
        const LaurentRational& c = img.terms().begin()->second;
        if (!is_in_A(c) || evaluate_at_zero(c) != 1) {
          rec.fail(rel, b, "coefficient " + c.to_string() + " is not 1 modulo qA");
          continue;
        }
        if (i == 0 && dir == Dir::e && !(c == LaurentRational(1)))
          rec.fail(rel, b, "coefficient " + c.to_string() + " is not exactly 1");
      }
  return report;
}

}  // namespace supercrystal
