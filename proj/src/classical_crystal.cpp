#include "supercrystal/classical_crystal.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace supercrystal {

SpinElement SpinElement::plus_then_minus(int n, int plus_count) {
  SpinElement b{n, 0};
  for (int pos = plus_count + 1; pos <= n; ++pos) b.minus |= 1U << (pos - 1);
  return b;
}

SpinElement SpinElement::parse(const std::string& s) {
  SpinElement b{static_cast<int>(s.size()), 0};
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '-')
      b.minus |= 1U << j;
    else if (s[j] != '+')
      throw std::invalid_argument("sign string may contain only '+' and '-': " + s);
  }
  return b;
}

int SpinElement::minus_count() const { return std::popcount(minus); }

std::string SpinElement::to_string() const {
  std::string s(static_cast<std::size_t>(n), '+');
  for (int pos = 1; pos <= n; ++pos)
    if (is_minus(pos)) s[static_cast<std::size_t>(pos - 1)] = '-';
  return s;
}

SpinClass spin_class(const SpinElement& b) { return b.minus_count() % 2 == 0 ? SpinClass::plus : SpinClass::minus; }

namespace {

inline std::uint32_t bit(int position) { return 1U << (position - 1); }

void check_index(int i, const AlgebraType& type) {
  if (i < 1 || i > type.rank()) throw std::out_of_range("spin Kashiwara index must lie in 1..N");
}

}  // namespace

std::optional<SpinElement> spin_kashiwara(Dir dir, int i, const SpinElement& b, const AlgebraType& type) {
  check_index(i, type);
  const int n = type.rank();
  SpinElement out = b;
  if (i < n) {
    // e: (+,-) -> (-,+) at i, i+1; f is the inverse.
    const bool left_minus = b.is_minus(i), right_minus = b.is_minus(i + 1);
    const bool ok = dir == Dir::e ? (!left_minus && right_minus) : (left_minus && !right_minus);
    if (!ok) return std::nullopt;
    out.minus ^= bit(i) | bit(i + 1);
    return out;
  }
  if (type.family() == Family::D) {
    // e: (+,+) -> (-,-) at N-1, N.
    const bool a = b.is_minus(n - 1), c = b.is_minus(n);
    const bool ok = dir == Dir::e ? (!a && !c) : (a && c);
    if (!ok) return std::nullopt;
    out.minus ^= bit(n - 1) | bit(n);
    return out;
  }
  // B: e: + -> - at N.
  const bool ok = dir == Dir::e ? !b.is_minus(n) : b.is_minus(n);
  if (!ok) return std::nullopt;
  out.minus ^= bit(n);
  return out;
}

std::pair<int, int> spin_strings(int i, const SpinElement& b, const AlgebraType& type) {
  return {spin_kashiwara(Dir::e, i, b, type) ? 1 : 0, spin_kashiwara(Dir::f, i, b, type) ? 1 : 0};
}

ClassicalWeight spin_weight(const SpinElement& b, const AlgebraType& type) {
  const int n = type.rank();
  auto s = [&](int pos) { return b.is_minus(pos) ? -1 : 1; };
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) c[static_cast<std::size_t>(i - 1)] = (s(i + 1) - s(i)) / 2;
  if (type.family() == Family::D)
    c[static_cast<std::size_t>(n - 1)] = -(s(n - 1) + s(n)) / 2;
  else
    c[static_cast<std::size_t>(n - 1)] = -s(n);
  return ClassicalWeight(std::move(c));
}

std::vector<SpinElement> spin_elements(const AlgebraType& type, SpinClass cls) {
  const int n = type.rank();
  std::vector<SpinElement> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    SpinElement b{n, m};
    if (type.family() == Family::D && spin_class(b) != cls) continue;
    out.push_back(b);
  }
  return out;
}

// ---- tableaux ---------------------------------------------------------------

std::string letter_name(int rank, int n) {
  if (rank >= 1 && rank <= n) return std::to_string(rank);
  if (rank > n && rank <= 2 * n) return std::to_string(2 * n + 1 - rank) + "bar";
  throw std::out_of_range("letter rank out of range");
}

Column to_tableau(const SpinElement& b) {
  Column c;
  for (int a = 1; a <= b.n; ++a) c.push_back(b.is_minus(a) ? 2 * b.n + 1 - a : a);
  std::sort(c.begin(), c.end());
  return c;
}

SpinElement from_tableau(const Column& column, int n) {
  if (static_cast<int>(column.size()) != n) throw std::invalid_argument("column must have N entries");
  SpinElement b{n, 0};
  std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
  for (int r : column) {
    if (r < 1 || r > 2 * n) throw std::invalid_argument("letter out of range");
    const int a = r <= n ? r : 2 * n + 1 - r;
    if (seen[static_cast<std::size_t>(a)]++) throw std::invalid_argument("letter and its bar both present");
    if (r > n) b.minus |= bit(a);
  }
  return b;
}

bool letter_preceq(int a, int b, const AlgebraType& type) {
  if (a == b) return true;
  const int n = type.rank();
  if (type.family() == Family::D && ((a == n && b == n + 1) || (a == n + 1 && b == n))) return false;
  return a < b;
}

bool is_valid_column(const Column& column, const AlgebraType& type) {
  const int n = type.rank();
  if (static_cast<int>(column.size()) != n) return false;
  std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t j = 0; j < column.size(); ++j) {
    const int r = column[j];
    if (r < 1 || r > 2 * n) return false;
    if (j > 0 && (column[j - 1] == r || !letter_preceq(column[j - 1], r, type))) return false;
    const int a = r <= n ? r : 2 * n + 1 - r;
    if (seen[static_cast<std::size_t>(a)]++) return false;
  }
  return true;
}

bool is_semistandard_skew(const SkewTableau& t, const AlgebraType& type) {
  const int n = type.rank();
  if (t.overlap < 0 || t.overlap > n) return false;
  if (!is_valid_column(t.right, type) || !is_valid_column(t.left, type)) return false;
  for (int r = 1; r <= t.overlap; ++r) {
    const int b = t.left[static_cast<std::size_t>(r - 1)];
    const int a = t.right[static_cast<std::size_t>(n - t.overlap + r - 1)];
    if (!letter_preceq(b, a, type)) return false;
  }
  return true;
}

ClassicalWeight xi(const AlgebraType& type, int k, bool prime) {
  const int n = type.rank();
  if (k < 0 || k > n) throw std::out_of_range("Xi index out of range");
  ClassicalWeight w = ClassicalWeight::zero(n);
  if (k == 0) return w;
  if (type.family() == Family::B) {
    if (prime) throw std::invalid_argument("Xi_N' exists only for family D");
    return k < n ? ClassicalWeight::fundamental(n, k) : 2 * ClassicalWeight::fundamental(n, n);
  }
  if (prime && k != n) throw std::invalid_argument("only Xi_N has a primed variant");
  if (k <= n - 2) return ClassicalWeight::fundamental(n, k);
  if (k == n - 1) return ClassicalWeight::fundamental(n, n - 1) + ClassicalWeight::fundamental(n, n);
  return prime ? 2 * ClassicalWeight::fundamental(n, n - 1) : 2 * ClassicalWeight::fundamental(n, n);
}

std::string xi_name(const ClassicalWeight& w, const AlgebraType& type) {
  const int n = type.rank();
  for (int k = 0; k <= n; ++k) {
    if (w == -1 * xi(type, k)) return "-Xi" + std::to_string(k);
    if (type.family() == Family::D && k == n && w == -1 * xi(type, k, true)) return "-Xi" + std::to_string(k) + "'";
  }
  return {};
}

ClassicalComponentLabel koga_component(const SpinElement& u, const SpinElement& v, const AlgebraType& type) {
  const int n = type.rank();
  if (u.n != n || v.n != n) throw std::invalid_argument("sign vectors must have length N");
  const Column a = to_tableau(u), b = to_tableau(v);
  auto ss = [&](int k) { return is_semistandard_skew(SkewTableau{a, b, k}, type); };
  auto label = [&](int k) { return ClassicalComponentLabel{-1 * xi(type, k)}; };

  if (type.family() == Family::B) {
    if (ss(n)) return label(n);
    for (int k = 0; k < n; ++k)
      if (ss(k) && !ss(k + 1)) return label(k);
    throw std::logic_error("Koga classification found no component");
  }
  if (spin_class(u) != SpinClass::plus) throw std::invalid_argument("first factor must lie in the plus class");
  const bool plus_plus = spin_class(v) == SpinClass::plus;
  const int top = plus_plus ? n : n - 1;
  if (ss(top)) return label(top);
  for (int k = top % 2; k + 2 <= top; k += 2)
    if (ss(k) && !ss(k + 2)) return label(k);
  throw std::logic_error("Koga classification found no component");
}

// ---- words --------------------------------------------------------------------

std::optional<SpinWord> word_kashiwara(Dir dir, int i, const SpinWord& w, const AlgebraType& type) {
  check_index(i, type);
  return detail::tensor_apply(
      dir, w, [&](const SpinElement& x) { return spin_strings(i, x, type); },
      [&](const SpinElement& x) { return spin_kashiwara(dir, i, x, type); });
}

std::pair<int, int> word_strings(int i, const SpinWord& w, const AlgebraType& type) {
  check_index(i, type);
  return detail::tensor_strings(w, [&](const SpinElement& x) { return spin_strings(i, x, type); });
}

ClassicalWeight word_weight(const SpinWord& w, const AlgebraType& type) {
  ClassicalWeight total = ClassicalWeight::zero(type.rank());
  for (const auto& x : w) total += spin_weight(x, type);
  return total;
}

bool is_classical_lowest_word(const SpinWord& w, const AlgebraType& type) {
  for (int i = 1; i <= type.rank(); ++i)
    if (word_kashiwara(Dir::f, i, w, type)) return false;
  return true;
}

std::string word_key(const SpinWord& w) {
  std::string key;
  key.reserve(w.size() * 4);
  for (const auto& x : w)
    for (int s = 0; s < 32; s += 8) key.push_back(static_cast<char>((x.minus >> s) & 0xFFU));
  return key;
}

ClassicalCrystal::ClassicalCrystal(AlgebraType type, std::vector<SpinWord> vertices)
    : type_(type), vertices_(std::move(vertices)) {
  for (std::size_t j = 0; j < vertices_.size(); ++j) index_.emplace(word_key(vertices_[j]), static_cast<long>(j));
}

ClassicalCrystal ClassicalCrystal::spin(const AlgebraType& type, SpinClass cls) {
  std::vector<SpinWord> v;
  for (const auto& b : spin_elements(type, cls)) v.push_back({b});
  return ClassicalCrystal(type, std::move(v));
}

long ClassicalCrystal::find(const SpinWord& w) const {
  auto it = index_.find(word_key(w));
  return it == index_.end() ? -1 : it->second;
}

std::map<ClassicalWeight, long> ClassicalCrystal::character() const {
  std::map<ClassicalWeight, long> ch;
  for (const auto& w : vertices_) ++ch[word_weight(w, type_)];
  return ch;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::pair<std::vector<std::size_t>, std::vector<ClassicalComponent>> classical_components_with_membership(
    const std::vector<ClassicalCrystal>& factors) {
  if (factors.empty()) throw std::invalid_argument("need at least one factor");
  const AlgebraType type = factors.front().type();
  const int n = type.rank();
  const std::size_t m = factors.size();
  std::vector<std::size_t> stride(m, 1), offset(m, 0), length(m);
  std::size_t total = 1;
  for (std::size_t j = m; j-- > 0;) {
    stride[j] = total;
    total *= factors[j].size();
  }
  std::size_t pos = 0;
  for (std::size_t j = 0; j < m; ++j) {
    offset[j] = pos;
    length[j] = factors[j].word_length();
    pos += length[j];
  }
  auto word_of = [&](std::size_t idx) {
    SpinWord w;
    for (std::size_t j = 0; j < m; ++j) {
      const auto& piece = factors[j].vertices()[(idx / stride[j]) % factors[j].size()];
      w.insert(w.end(), piece.begin(), piece.end());
    }
    return w;
  };

  UnionFind uf(total);
  std::vector<char> lowest(total, 1);
  for (std::size_t idx = 0; idx < total; ++idx) {
    const SpinWord w = word_of(idx);
    for (int i = 1; i <= n; ++i) {
      auto image = word_kashiwara(Dir::f, i, w, type);
      if (!image) continue;
      lowest[idx] = 0;
      std::size_t changed = 0;
      while ((*image)[changed] == w[changed]) ++changed;
      std::size_t j = 0;
      while (changed >= offset[j] + length[j]) ++j;
      const SpinWord piece(image->begin() + static_cast<long>(offset[j]),
                           image->begin() + static_cast<long>(offset[j] + length[j]));
      const long k = factors[j].find(piece);
      if (k < 0) throw std::logic_error("factor crystal is not closed under Kashiwara operators");
      const std::size_t old_k = (idx / stride[j]) % factors[j].size();
      const std::size_t target = idx - old_k * stride[j] + static_cast<std::size_t>(k) * stride[j];
      uf.unite(idx, target);
    }
  }

  std::map<std::size_t, std::size_t> root_to_component;
  std::vector<ClassicalComponent> components;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> membership(total);
  std::vector<char> has_lowest;
  for (std::size_t idx = 0; idx < total; ++idx) {
    const std::size_t r = uf.find(idx);
    auto [it, inserted] = root_to_component.emplace(r, components.size());
    if (inserted) {
      components.emplace_back();
      has_lowest.push_back(0);
    }
    auto& comp = components[it->second];
    ++comp.size;
    membership[idx] = it->second;
    if (lowest[idx]) {
      if (has_lowest[it->second]) throw std::logic_error("component with two lowest vertices");
      has_lowest[it->second] = 1;
      comp.lowest = word_of(idx);
      comp.label.lowest_weight = word_weight(comp.lowest, type);
    }
  }
  for (char h : has_lowest)
    if (!h) throw std::logic_error("component without a lowest vertex");
  return {std::move(membership), std::move(components)};
}

std::vector<ClassicalComponent> decompose_classical_tensor(const std::vector<ClassicalCrystal>& factors) {
  auto comps = classical_components_with_membership(factors).second;
  std::stable_sort(comps.begin(), comps.end(), [](const ClassicalComponent& x, const ClassicalComponent& y) {
    return std::tie(x.label, x.lowest) < std::tie(y.label, y.lowest);
  });
  return comps;
}

SpinWord classical_lowest_word(const ClassicalWeight& Lambda, const AlgebraType& type) {
  if (!Lambda.is_antidominant()) throw std::invalid_argument("weight must be antidominant: " + Lambda.to_string());
  const int n = type.rank();
  if (Lambda.rank() != n) throw std::invalid_argument("weight rank does not match the algebra");
  SpinWord w;
  for (int i = 1; i <= n; ++i) {
    for (int c = 0; c < -Lambda.at(i); ++c) {
      if (i == n) {
        w.push_back(SpinElement::all_plus(n));
      } else if (i == n - 1 && type.family() == Family::D) {
        w.push_back(SpinElement::plus_then_minus(n, n - 1));
      } else {
        w.push_back(SpinElement::all_plus(n));
        w.push_back(SpinElement::plus_then_minus(n, i));
      }
    }
  }
  return w;
}

ClassicalCrystal realize_classical_crystal(const ClassicalWeight& Lambda, const AlgebraType& type) {
  const SpinWord seed = classical_lowest_word(Lambda, type);
  std::set<SpinWord> seen{seed};
  std::deque<SpinWord> queue{seed};
  while (!queue.empty()) {
    SpinWord w = std::move(queue.front());
    queue.pop_front();
    for (Dir d : {Dir::e, Dir::f})
      for (int i = 1; i <= type.rank(); ++i)
        if (auto next = word_kashiwara(d, i, w, type); next && seen.insert(*next).second)
          queue.push_back(std::move(*next));
  }
  return ClassicalCrystal(type, std::vector<SpinWord>(seen.begin(), seen.end()));
}

}  // namespace supercrystal
