#include "supercrystal/super_crystal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace supercrystal {

std::string Atom::to_string() const { return "(" + signs.to_string() + ")_" + std::to_string(level); }

int atom_n0(const Atom& a) { return a.level + (a.signs.is_minus(1) ? 1 : 0); }

Weight atom_weight(const Atom& a, const AlgebraType& type) {
  return lift(spin_weight(a.signs, type), atom_n0(a));
}

bool in_plus_spin_module(const Atom& a, const AlgebraType& type) {
  if (type.family() == Family::B) return true;
  return (a.signs.minus_count() + a.level) % 2 == 0;
}

std::optional<Atom> atom_kashiwara(Dir dir, int i, const Atom& a, const AlgebraType& type) {
  if (i < 0 || i > type.rank()) throw std::out_of_range("Kashiwara index must lie in 0..N");
  if (i >= 1) {
    auto s = spin_kashiwara(dir, i, a.signs, type);
    if (!s) return std::nullopt;
    return Atom{*s, a.level};
  }
  Atom out = a;
  if (dir == Dir::e) {
    if (!a.signs.is_minus(1)) return std::nullopt;
    out.signs.minus &= ~1U;
    ++out.level;
    return out;
  }
  if (a.signs.is_minus(1) || a.level == 0) return std::nullopt;
  out.signs.minus |= 1U;
  --out.level;
  return out;
}

namespace {

std::pair<int, int> atom_strings(int i, const Atom& a, const AlgebraType& type) {
  return spin_strings(i, a.signs, type);
}

std::size_t zero_target(const Word& w) {
  for (std::size_t j = 0; j < w.size(); ++j)
    if (atom_n0(w[j]) > 0) return j;
  return w.size() - 1;
}

}  // namespace

std::optional<std::size_t> acting_position(Dir dir, int i, const Word& w, const AlgebraType& type) {
  if (i < 0 || i > type.rank()) throw std::out_of_range("Kashiwara index must lie in 0..N");
  if (w.empty()) return std::nullopt;
  const std::size_t pos = i == 0 ? zero_target(w)
                                 : detail::tensor_target(dir, w, [&](const Atom& a) { return atom_strings(i, a, type); });
  if (!atom_kashiwara(dir, i, w[pos], type)) return std::nullopt;
  return pos;
}

std::optional<Word> tensor_kashiwara(Dir dir, int i, const Word& w, const AlgebraType& type) {
  auto pos = acting_position(dir, i, w, type);
  if (!pos) return std::nullopt;
  Word out = w;
  out[*pos] = *atom_kashiwara(dir, i, w[*pos], type);
  return out;
}

std::pair<int, int> epsilon_phi(int i, const Word& w, const AlgebraType& type) {
  if (i == 0) throw std::invalid_argument("eps/phi are defined only for indices 1..N");
  if (i < 0 || i > type.rank()) throw std::out_of_range("Kashiwara index must lie in 1..N");
  return detail::tensor_strings(w, [&](const Atom& a) { return atom_strings(i, a, type); });
}

Weight word_weight(const Word& w, const AlgebraType& type) {
  Weight total = Weight::zero(type.rank());
  for (const auto& a : w) total += atom_weight(a, type);
  return total;
}

int total_level(const Word& w) {
  int s = 0;
  for (const auto& a : w) s += a.level;
  return s;
}

bool is_classical_lowest(const Word& w, const AlgebraType& type) {
  for (int i = 1; i <= type.rank(); ++i)
    if (acting_position(Dir::f, i, w, type)) return false;
  return true;
}

bool is_lowest(const Word& w, const AlgebraType& type) {
  return !acting_position(Dir::f, 0, w, type) && is_classical_lowest(w, type);
}

std::string word_key(const Word& w) {
  std::string key;
  key.reserve(w.size() * 6);
  for (const auto& a : w) {
    for (int s = 0; s < 32; s += 8) key.push_back(static_cast<char>((a.signs.minus >> s) & 0xFFU));
    key.push_back(static_cast<char>(a.level & 0xFF));
    key.push_back(static_cast<char>((a.level >> 8) & 0xFF));
  }
  return key;
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j) s += " x ";
    s += w[j].to_string();
  }
  return s.empty() ? "()" : s;
}

Word to_atoms(const SpinWord& w, int level) {
  Word out;
  out.reserve(w.size());
  for (const auto& b : w) out.push_back(Atom{b, level});
  return out;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word omega0_lowest_word(const AlgebraType& type) {
  const int n = type.rank();
  return {Atom{SpinElement::all_plus(n), 0}, Atom{SpinElement::plus_then_minus(n, 0), 0}};
}

Word shift(const Word& b, const AlgebraType& type) { return concat(b, omega0_lowest_word(type)); }

std::vector<Word> e_closure(const Word& seed, const AlgebraType& type, int max_level) {
  if (total_level(seed) > max_level) return {};
  std::unordered_map<std::string, char> seen{{word_key(seed), 1}};
  std::vector<Word> out{seed};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i <= type.rank(); ++i) {
      auto next = tensor_kashiwara(Dir::e, i, out[head], type);
      if (!next || total_level(*next) > max_level) continue;
      if (seen.emplace(word_key(*next), 1).second) out.push_back(std::move(*next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Character convolve(const Character& a, const Character& b, int cap) {
  Character out;
  for (const auto& [wa, ca] : a) {
    if (wa.n0() > cap) continue;
    for (const auto& [wb, cb] : b) {
      if (wa.n0() + wb.n0() > cap) continue;
      out[wa + wb] += ca * cb;
    }
  }
  return out;
}

Character shift_character(const Character& a, int n0_shift, int cap) {
  Character out;
  if (a.empty()) return out;
  const Weight step = n0_shift * Weight::fundamental(a.begin()->first.rank(), 0);
  for (const auto& [w, c] : a)
    if (w.n0() + n0_shift <= cap) out[w + step] += c;
  return out;
}

// ---- factors ----------------------------------------------------------------

namespace {

std::vector<Word> omega0_vertices(const AlgebraType& type, int max_level) {
  static std::mutex mu;
  static std::map<std::tuple<AlgebraType, int>, std::vector<Word>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(type, max_level);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, e_closure(omega0_lowest_word(type), type, max_level)).first;
  return it->second;
}

Character character_of(const std::vector<Word>& words, const AlgebraType& type, int cap) {
  Character ch;
  for (const auto& w : words) {
    const Weight wt = word_weight(w, type);
    if (wt.n0() <= cap) ++ch[wt];
  }
  return ch;
}

Word suffix_for(const AlgebraType& type, int copies) {
  Word out;
  for (int c = 0; c < copies; ++c) out = concat(std::move(out), omega0_lowest_word(type));
  return out;
}

}  // namespace

SuperFactor::SuperFactor(FactorKind kind, AlgebraType type, Weight lowest_weight, Word lowest_word)
    : kind_(kind), type_(type), lowest_weight_(std::move(lowest_weight)), lowest_word_(std::move(lowest_word)) {}

SuperFactor SuperFactor::spin(const AlgebraType& type) {
  const int n = type.rank();
  return SuperFactor(FactorKind::spin, type, -1 * Weight::fundamental(n, n), {Atom{SpinElement::all_plus(n), 0}});
}

SuperFactor SuperFactor::spin_minus(const AlgebraType& type) {
  if (type.family() != Family::D) throw std::invalid_argument("B(-omega_{N-1}) spin module exists only for family D");
  const int n = type.rank();
  return SuperFactor(FactorKind::spin_minus, type, -1 * Weight::fundamental(n, n - 1),
                     {Atom{SpinElement::plus_then_minus(n, n - 1), 0}});
}

SuperFactor SuperFactor::omega0(const AlgebraType& type) {
  return SuperFactor(FactorKind::omega0, type, Weight::fundamental(type.rank(), 0), omega0_lowest_word(type));
}

SuperFactor SuperFactor::typical(const Weight& lambda, const AlgebraType& type) {
  if (lambda.rank() != type.rank()) throw std::invalid_argument("weight rank does not match the algebra");
  if (lambda.n0() < 1) throw std::invalid_argument("typical model needs n0 >= 1: " + lambda.to_string());
  const ClassicalWeight cl = classical_restriction(lambda);
  Word w = concat(omega0_lowest_word(type), to_atoms(classical_lowest_word(cl, type)));
  w = concat(std::move(w), suffix_for(type, lambda.n0() - 1));
  return SuperFactor(FactorKind::typical, type, lambda, std::move(w));
}

SuperFactor SuperFactor::irreducible(const Weight& lambda, const AlgebraType& type) {
  const int n = type.rank();
  if (lambda.rank() != n) throw std::invalid_argument("weight rank does not match the algebra");
  if (lambda.n0() < 0) throw std::invalid_argument("n0 must be non-negative: " + lambda.to_string());
  if (lambda.n0() >= 1) return typical(lambda, type);
  if (lambda == -1 * Weight::fundamental(n, n)) return spin(type);
  if (type.family() == Family::D && lambda == -1 * Weight::fundamental(n, n - 1)) return spin_minus(type);
  const ClassicalWeight cl = classical_restriction(lambda);
  return SuperFactor(FactorKind::atypical, type, lambda, to_atoms(classical_lowest_word(cl, type)));
}

std::string SuperFactor::name() const { return "B(" + lowest_weight_.to_string() + ")"; }

std::vector<Word> SuperFactor::vertices(int max_level) const {
  if (max_level < 0) return {};
  const int n = type_.rank();
  switch (kind_) {
    case FactorKind::spin:
    case FactorKind::spin_minus: {
      const int want = kind_ == FactorKind::spin ? 0 : 1;
      std::vector<Word> out;
      for (int k = 0; k <= max_level; ++k)
        for (std::uint32_t m = 0; m < (1U << n); ++m) {
          Atom a{SpinElement{n, m}, k};
          if (type_.family() == Family::D && (a.signs.minus_count() + k) % 2 != want) continue;
          out.push_back({a});
        }
      std::sort(out.begin(), out.end());
      return out;
    }
    case FactorKind::omega0:
      return omega0_vertices(type_, max_level);
    case FactorKind::typical: {
      const auto base = omega0_vertices(type_, max_level);
      const ClassicalCrystal cl = realize_classical_crystal(classical_restriction(lowest_weight_), type_);
      const Word suffix = suffix_for(type_, lowest_weight_.n0() - 1);
      std::vector<Word> out;
      out.reserve(base.size() * cl.size());
      for (const auto& b : base)
        for (const auto& u : cl.vertices()) out.push_back(concat(concat(b, to_atoms(u)), suffix));
      std::sort(out.begin(), out.end());
      return out;
    }
    case FactorKind::atypical:
      return e_closure(lowest_word_, type_, max_level);
  }
  return {};
}

Character SuperFactor::character(int cap) const {
  if (cap < 0) return {};
  if (kind_ != FactorKind::typical) return character_of(vertices(cap), type_, cap);
  const int extra = lowest_weight_.n0() - 1;
  const int base_cap = cap - extra;
  if (base_cap < 0) return {};
  const ClassicalCrystal cl = realize_classical_crystal(classical_restriction(lowest_weight_), type_);
  Character classical;
  for (const auto& u : cl.vertices()) ++classical[word_weight(to_atoms(u), type_)];
  const Character omega = character_of(omega0_vertices(type_, base_cap), type_, base_cap);
  return shift_character(convolve(omega, classical, base_cap), extra, cap);
}

// ---- graphs -------------------------------------------------------------------

SuperGraph::SuperGraph(AlgebraType type, std::vector<Word> vertices) : type_(type), vertices_(std::move(vertices)) {
  index_.reserve(vertices_.size());
  for (std::size_t j = 0; j < vertices_.size(); ++j) index_.emplace(word_key(vertices_[j]), static_cast<long>(j));
}

long SuperGraph::find(const Word& w) const {
  auto it = index_.find(word_key(w));
  return it == index_.end() ? -1 : it->second;
}

std::vector<SuperGraph::Edge> SuperGraph::f_edges() const {
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < vertices_.size(); ++s)
    for (int i = 0; i <= type_.rank(); ++i)
      if (auto t = tensor_kashiwara(Dir::f, i, vertices_[s], type_)) {
        const long k = find(*t);
        if (k >= 0) edges.push_back({s, static_cast<std::size_t>(k), i});
      }
  return edges;
}

Weight simple_root_weight(const AlgebraType& type, int i) {
  const auto a = cartan_matrix(type);
  std::vector<int> c;
  for (int j = 0; j <= type.rank(); ++j) c.push_back(a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
  return Weight(std::move(c));
}

std::vector<std::string> check_crystal_axioms(const SuperGraph& graph) {
  const AlgebraType& type = graph.type();
  std::vector<std::string> out;
  for (const Word& b : graph.vertices()) {
    const Weight wt = word_weight(b, type);
    for (int i = 0; i <= type.rank(); ++i) {
      const Weight alpha = simple_root_weight(type, i);
      for (const Dir dir : {Dir::e, Dir::f}) {
        const auto image = tensor_kashiwara(dir, i, b, type);
        if (!image || graph.find(*image) < 0) continue;
        const Dir back = dir == Dir::e ? Dir::f : Dir::e;
        const std::string op = std::string(dir == Dir::e ? "e" : "f") + std::to_string(i);
        const auto returned = tensor_kashiwara(back, i, *image, type);
        if (!returned || *returned != b) out.push_back(op + " is not inverted on " + to_string(b));
        const Weight expected = dir == Dir::e ? wt + alpha : wt - alpha;
        if (word_weight(*image, type) != expected) out.push_back(op + " shifts the weight wrongly on " + to_string(b));
      }
      if (i == 0) continue;
      const auto [eps, phi] = epsilon_phi(i, b, type);
      if (phi - eps != wt[static_cast<std::size_t>(i)])
        out.push_back("phi - eps differs from <h" + std::to_string(i) + ", wt> on " + to_string(b));
    }
  }
  return out;
}

namespace {

struct FactorLists {
  std::vector<std::vector<Word>> words;  // sorted by level
  std::vector<std::vector<int>> levels;
};

FactorLists factor_lists(const std::vector<SuperFactor>& factors, int max_level) {
  FactorLists fl;
  for (const auto& f : factors) {
    auto v = f.vertices(max_level);
    std::stable_sort(v.begin(), v.end(), [](const Word& a, const Word& b) { return total_level(a) < total_level(b); });
    std::vector<int> lv;
    lv.reserve(v.size());
    for (const auto& w : v) lv.push_back(total_level(w));
    fl.words.push_back(std::move(v));
    fl.levels.push_back(std::move(lv));
  }
  return fl;
}

void for_each_product(const FactorLists& fl, std::size_t j, Word& prefix, int budget,
                      const std::function<void(const Word&)>& visit) {
  if (j == fl.words.size()) {
    visit(prefix);
    return;
  }
  const std::size_t mark = prefix.size();
  for (std::size_t k = 0; k < fl.words[j].size(); ++k) {
    if (fl.levels[j][k] > budget) break;
    prefix.insert(prefix.end(), fl.words[j][k].begin(), fl.words[j][k].end());
    for_each_product(fl, j + 1, prefix, budget - fl.levels[j][k], visit);
    prefix.resize(mark);
  }
}

}  // namespace

std::vector<Word> product_vertices(const std::vector<SuperFactor>& factors, int max_level) {
  std::vector<Word> out;
  if (max_level < 0) return out;
  const FactorLists fl = factor_lists(factors, max_level);
  Word prefix;
  for_each_product(fl, 0, prefix, max_level, [&](const Word& w) { out.push_back(w); });
  std::sort(out.begin(), out.end());
  return out;
}

SuperDecomposition decompose_super(const std::vector<SuperFactor>& factors, int cap, LowestSearch search) {
  if (cap < 0) throw std::invalid_argument("cap must be non-negative");
  if (factors.empty()) throw std::invalid_argument("need at least one factor");
  const AlgebraType type = factors.front().type();
  SuperDecomposition out;
  out.summary.cap = cap;
  out.summary.complete_below = cap;

  Character ch = factors.front().character(cap);
  for (std::size_t j = 1; j < factors.size(); ++j) ch = convolve(ch, factors[j].character(cap), cap);
  out.summary.multiplicity = std::move(ch);

  auto consider = [&](const Word& w) {
    if (word_weight(w, type).n0() <= cap && is_lowest(w, type)) out.lowest_vertices.push_back(w);
  };
  if (search == LowestSearch::seeded) {
    const Word& u1 = factors.front().lowest_word();
    const std::vector<SuperFactor> rest(factors.begin() + 1, factors.end());
    const int budget = cap - total_level(u1);
    if (budget >= 0) {
      const FactorLists fl = factor_lists(rest, budget);
      Word prefix = u1;
      for_each_product(fl, 0, prefix, budget, consider);
    }
  } else {
    const FactorLists fl = factor_lists(factors, cap);
    Word prefix;
    for_each_product(fl, 0, prefix, cap, consider);
  }
  std::sort(out.lowest_vertices.begin(), out.lowest_vertices.end());
  for (const auto& w : out.lowest_vertices) out.summary.summands.push_back(word_weight(w, type));
  std::sort(out.summary.summands.begin(), out.summary.summands.end());
  return out;
}

// ---- labels and 0-arrows ----------------------------------------------------

std::string SuperComponentLabel::to_string(const AlgebraType& type) const {
  std::string name = xi_name(classical_lowest, type);
  if (name.empty()) name = classical_lowest.to_string();
  return "B(" + name + "; " + std::to_string(level) + ")";
}

LabeledComponents label_super_components(const SuperGraph& graph) {
  const AlgebraType& type = graph.type();
  const std::size_t n = graph.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> lowest(n, 1);
  for (std::size_t s = 0; s < n; ++s) {
    for (int i = 1; i <= type.rank(); ++i) {
      auto t = tensor_kashiwara(Dir::f, i, graph.vertices()[s], type);
      if (!t) continue;
      lowest[s] = 0;
      const long k = graph.find(*t);
      if (k < 0) throw std::logic_error("vertex set is not closed under classical operators");
      const std::size_t a = root(s), b = root(static_cast<std::size_t>(k));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  LabeledComponents out;
  out.membership.resize(n);
  std::map<std::size_t, std::size_t> comp_of_root;
  std::vector<char> has_lowest;
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, inserted] = comp_of_root.emplace(root(v), out.labels.size());
    if (inserted) {
      out.labels.emplace_back();
      out.lowest.emplace_back();
      out.sizes.push_back(0);
      has_lowest.push_back(0);
    }
    const std::size_t c = it->second;
    out.membership[v] = c;
    ++out.sizes[c];
    if (lowest[v]) {
      if (has_lowest[c]) throw std::logic_error("classical component with two lowest vertices");
      has_lowest[c] = 1;
      out.lowest[c] = graph.vertices()[v];
      const Weight wt = word_weight(out.lowest[c], type);
      out.labels[c] = SuperComponentLabel{classical_restriction(wt), wt.n0()};
    }
  }
  for (char h : has_lowest)
    if (!h) throw std::logic_error("classical component without a lowest vertex");
  return out;
}

ZeroArrowReport zero_arrow_relations(const SuperGraph& graph, const LabeledComponents& labels, std::size_t split) {
  const AlgebraType& type = graph.type();
  ZeroArrowReport report;
  std::set<ZeroArrow> seen;
  for (std::size_t s = 0; s < graph.size(); ++s) {
    const Word& w = graph.vertices()[s];
    auto pos = acting_position(Dir::f, 0, w, type);
    if (!pos) continue;
    Word t = w;
    t[*pos] = *atom_kashiwara(Dir::f, 0, w[*pos], type);
    const long k = graph.find(t);
    if (k < 0) continue;
    ++report.edge_count;
    const Side side = *pos < split ? Side::L : Side::R;
    if (side == Side::R) {
      const Word first(w.begin(), w.begin() + static_cast<long>(std::min(split, w.size())));
      if (total_level(first) > 0) ++report.right_with_positive_first_level;
    }
    seen.insert(ZeroArrow{labels.labels[labels.membership[s]], labels.labels[labels.membership[static_cast<std::size_t>(k)]],
                          side});
  }
  report.relations.assign(seen.begin(), seen.end());
  return report;
}

LabeledCrystal build_omega0(const AlgebraType& type, int cap) {
  if (cap < 1) throw std::invalid_argument("build_omega0 needs cap >= 1");
  SuperGraph g(type, SuperFactor::omega0(type).vertices(cap));
  LabeledComponents c = label_super_components(g);
  return {std::move(g), std::move(c)};
}

SuperGraph typical_model(const Weight& lambda, const AlgebraType& type, int cap) {
  return SuperGraph(type, SuperFactor::typical(lambda, type).vertices(cap));
}

SuperGraph spin_spin_graph(const AlgebraType& type, bool minus_second, int cap) {
  const SuperFactor second = minus_second ? SuperFactor::spin_minus(type) : SuperFactor::spin(type);
  return SuperGraph(type, product_vertices({SuperFactor::spin(type), second}, cap));
}

}  // namespace supercrystal
