#include "supercrystal/roots.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace supercrystal {

AlgebraType::AlgebraType(Family family, int n) : family_(family), n_(n) {
  if (n < 2) throw std::invalid_argument("rank N must be >= 2, got " + std::to_string(n));
  if (n > 30) throw std::invalid_argument("rank N too large for sign-mask encoding");
}

std::string AlgebraType::name() const {
  return family_name(family_) + "(" + std::to_string(n_) + ",1)";
}

Family parse_family(const std::string& s) {
  if (s == "D" || s == "d") return Family::D;
  if (s == "B" || s == "b") return Family::B;
  throw std::invalid_argument("unknown family '" + s + "' (expected D or B)");
}

std::string family_name(Family f) { return f == Family::D ? "D" : "B"; }

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---- Weight ---------------------------------------------------------------

Weight::Weight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

Weight Weight::zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(n) + 1, 0)); }

Weight Weight::fundamental(int n, int i) {
  if (i < 0 || i > n) throw std::out_of_range("fundamental weight index");
  Weight w = zero(n);
  w[static_cast<std::size_t>(i)] = 1;
  return w;
}

Weight Weight::from_lowest_form(std::span<const int> n_list) {
  if (n_list.size() < 3) throw std::invalid_argument("weight needs n0..nN with N >= 2");
  std::vector<int> c(n_list.begin(), n_list.end());
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
  return Weight(std::move(c));
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Weight operator*(int k, Weight a) {
  for (auto& c : a.coeffs_) c *= k;
  return a;
}

namespace {

std::string linear_combination(std::span<const int> coeffs, const std::string& symbol, int first_index) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int c = coeffs[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const int a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << symbol << (static_cast<int>(i) + first_index);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string Weight::to_string() const { return linear_combination(coeffs_, "w", 0); }

// ---- ClassicalWeight -----------------------------------------------------

ClassicalWeight::ClassicalWeight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

ClassicalWeight ClassicalWeight::zero(int n) {
  return ClassicalWeight(std::vector<int>(static_cast<std::size_t>(n), 0));
}

ClassicalWeight ClassicalWeight::fundamental(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("classical fundamental weight index");
  ClassicalWeight w = zero(n);
  w.coeffs_[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

bool ClassicalWeight::is_antidominant() const {
  for (int c : coeffs_)
    if (c > 0) return false;
  return true;
}

ClassicalWeight& ClassicalWeight::operator+=(const ClassicalWeight& o) {
  if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

ClassicalWeight& ClassicalWeight::operator-=(const ClassicalWeight& o) {
  if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

ClassicalWeight operator*(int k, ClassicalWeight a) {
  for (auto& c : a.coeffs_) c *= k;
  return a;
}

std::string ClassicalWeight::to_string() const { return linear_combination(coeffs_, "L", 1); }

ClassicalWeight classical_restriction(const Weight& lambda) {
  auto c = lambda.coeffs();
  return ClassicalWeight(std::vector<int>(c.begin() + 1, c.end()));
}

Weight lift(const ClassicalWeight& Lambda, int n0) {
  std::vector<int> c;
  c.reserve(Lambda.coeffs().size() + 1);
  c.push_back(n0);
  c.insert(c.end(), Lambda.coeffs().begin(), Lambda.coeffs().end());
  return Weight(std::move(c));
}

// ---- Root data -----------------------------------------------------------

namespace {

OrthoVector unit(int n, int index, Rational scale = 1) {
  OrthoVector v(static_cast<std::size_t>(n) + 1, Rational(0));
  v[static_cast<std::size_t>(index)] = scale;
  return v;
}

OrthoVector add(OrthoVector a, const OrthoVector& b, Rational scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

Rational form(const OrthoVector& a, const OrthoVector& b, const std::vector<Rational>& diag) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += diag[i] * a[i] * b[i];
  return s;
}

// The matrices as printed; the D(2,1) first row is completed so that node 0
// is joined to both nodes 1 and 2.
std::vector<std::vector<int>> printed_cartan(const AlgebraType& type) {
  const int n = type.rank();
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  at(0, 1) = 1;
  if (type.family() == Family::D) {
    for (int i = 1; i <= n; ++i) at(i, i) = 2;
    for (int i = 1; i <= n - 2; ++i) {
      at(i, i - 1) = -1;
      at(i, i + 1) = -1;
    }
    at(n - 2, n) = -1;
    at(n - 1, n - 2) = -1;
    at(n, n - 2) = -1;
    if (n == 2) at(0, 2) = 1;
  } else {
    for (int i = 1; i <= n; ++i) at(i, i) = 2;
    for (int i = 1; i <= n - 1; ++i) {
      at(i, i - 1) = -1;
      at(i, i + 1) = -1;
    }
    at(n, n - 1) = -2;
  }
  return a;
}

// Solve M x = rhs over the rationals (M square, invertible).
OrthoVector solve(std::vector<OrthoVector> m, OrthoVector rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].numerator() == 0) ++piv;
    if (piv == n) throw std::domain_error("singular system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].numerator() == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

RootData build_root_data(const AlgebraType& type) {
  const int n = type.rank();
  const bool is_d = type.family() == Family::D;
  RootData rd{type, printed_cartan(type), {}, {}, {}, {}, {}, {}, {}, {}, {}};

  rd.parity.assign(static_cast<std::size_t>(n) + 1, 0);
  rd.parity[0] = 1;
  rd.lvalues.assign(static_cast<std::size_t>(n) + 1, is_d ? -1 : -2);
  rd.lvalues[0] = is_d ? 1 : 2;
  if (!is_d) rd.lvalues[static_cast<std::size_t>(n)] = -1;

  // B(N,1) needs the doubled form for l_i <h_i, lambda> = (alpha_i, lambda).
  const Rational scale = is_d ? 1 : 2;
  rd.form_diagonal.assign(static_cast<std::size_t>(n) + 1, -scale);
  rd.form_diagonal[0] = scale;

  auto eps = [&](int i) { return unit(n, i); };
  const OrthoVector delta = unit(n, 0);
  rd.simple_roots.push_back(add(delta, eps(1), -1));
  for (int i = 1; i <= n - 1; ++i) rd.simple_roots.push_back(add(eps(i), eps(i + 1), -1));
  rd.simple_roots.push_back(is_d ? add(eps(n - 1), eps(n)) : eps(n));

  // Row i of the pairing matrix: x -> (alpha_i, x) / l_i.
  std::vector<OrthoVector> pairing_rows;
  for (int i = 0; i <= n; ++i) {
    OrthoVector row(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
      row[static_cast<std::size_t>(j)] = rd.simple_roots[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                         rd.form_diagonal[static_cast<std::size_t>(j)] /
                                         Rational(rd.lvalues[static_cast<std::size_t>(i)]);
    pairing_rows.push_back(std::move(row));
  }
  for (int j = 0; j <= n; ++j) {
    OrthoVector rhs(static_cast<std::size_t>(n) + 1, Rational(0));
    rhs[static_cast<std::size_t>(j)] = 1;
    rd.fundamental_weights.push_back(solve(pairing_rows, rhs));
  }

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      rd.even_positive_roots.push_back(add(eps(i), eps(j), -1));
      rd.even_positive_roots.push_back(add(eps(i), eps(j)));
    }
  if (!is_d)
    for (int i = 1; i <= n; ++i) rd.even_positive_roots.push_back(eps(i));
  rd.even_positive_roots.push_back(unit(n, 0, 2));

  for (int i = 1; i <= n; ++i) {
    rd.odd_positive_roots.push_back(add(delta, eps(i)));
    rd.odd_positive_roots.push_back(add(delta, eps(i), -1));
  }
  rd.odd_roots_bar = rd.odd_positive_roots;
  for (const auto& b : rd.odd_positive_roots) rd.odd_roots_bar.push_back(add(OrthoVector(b.size(), Rational(0)), b, -1));
  if (!is_d) rd.odd_positive_roots.push_back(delta);

  rd.rho = OrthoVector(static_cast<std::size_t>(n) + 1, Rational(0));
  for (const auto& b : rd.even_positive_roots) rd.rho = add(rd.rho, b);
  for (const auto& b : rd.odd_positive_roots) rd.rho = add(rd.rho, b, -1);
  return rd;
}

}  // namespace

const RootData& root_data(const AlgebraType& type) {
  static std::mutex mu;
  static std::map<AlgebraType, RootData> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, build_root_data(type)).first;
  return it->second;
}

std::vector<std::vector<int>> cartan_matrix(const AlgebraType& type) { return root_data(type).cartan; }

OrthoVector to_orthogonal(const Weight& w, const AlgebraType& type) {
  const auto& rd = root_data(type);
  if (w.rank() != type.rank()) throw std::invalid_argument("weight rank does not match algebra");
  OrthoVector x(static_cast<std::size_t>(type.rank()) + 1, Rational(0));
  for (int i = 0; i <= type.rank(); ++i)
    if (w[static_cast<std::size_t>(i)] != 0) x = add(x, rd.fundamental_weights[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]);
  return x;
}

Weight from_orthogonal(const OrthoVector& x, const AlgebraType& type) {
  const auto& rd = root_data(type);
  std::vector<int> c;
  for (int i = 0; i <= type.rank(); ++i) {
    const Rational p = form(rd.simple_roots[static_cast<std::size_t>(i)], x, rd.form_diagonal) /
                       Rational(rd.lvalues[static_cast<std::size_t>(i)]);
    if (p.denominator() != 1) throw std::domain_error("orthogonal vector is not an integral weight");
    c.push_back(static_cast<int>(p.numerator()));
  }
  return Weight(std::move(c));
}

Rational bilinear(const OrthoVector& a, const OrthoVector& b, const AlgebraType& type) {
  return form(a, b, root_data(type).form_diagonal);
}

Rational bilinear(const Weight& a, const Weight& b, const AlgebraType& type) {
  return bilinear(to_orthogonal(a, type), to_orthogonal(b, type), type);
}

bool is_typical(const Weight& lambda, const AlgebraType& type) {
  const auto& rd = root_data(type);
  const OrthoVector shifted = add(to_orthogonal(lambda, type), rd.rho, -1);
  for (const auto& beta : rd.odd_roots_bar)
    if (form(shifted, beta, rd.form_diagonal).numerator() == 0) return false;
  return true;
}

ClassicalWeight classical_simple_root(const AlgebraType& type, int i) {
  const auto& a = root_data(type).cartan;
  std::vector<int> c;
  for (int j = 1; j <= type.rank(); ++j) c.push_back(a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
  return ClassicalWeight(std::move(c));
}

std::vector<int> classical_root_expansion(const ClassicalWeight& diff, const AlgebraType& type) {
  const int n = type.rank();
  std::vector<OrthoVector> m(static_cast<std::size_t>(n), OrthoVector(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    const auto col = classical_simple_root(type, i);
    for (int j = 1; j <= n; ++j) m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = col.at(j);
  }
  OrthoVector rhs;
  for (int c : diff.coeffs()) rhs.emplace_back(c);
  const OrthoVector x = solve(m, rhs);
  std::vector<int> out;
  for (const auto& r : x) {
    if (r.denominator() != 1) throw std::domain_error("weight difference is not in the root lattice");
    out.push_back(static_cast<int>(r.numerator()));
  }
  return out;
}

}  // namespace supercrystal
