#include "supercrystal/qfield.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace supercrystal {

// ---- LaurentPoly ---------------------------------------------------------

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, mpz_class(c));
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(exponent, c);
  return p;
}

int LaurentPoly::low_exponent() const { return terms_.begin()->first; }
int LaurentPoly::high_exponent() const { return terms_.rbegin()->first; }

mpz_class LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot -= c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  std::map<int, mpz_class> out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out[e1 + e2] += c1 * c2;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    mpz_class c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (e == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) : s_(s) {}

  LaurentPoly parse_all() {
    LaurentPoly p = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return p;
  }

  LaurentPoly parse_sum() {
    LaurentPoly out;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    out += sign_term(sign);
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      out += sign_term(c == '-' ? -1 : 1);
    }
    return out;
  }

  std::size_t pos() const { return pos_; }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }

 private:
  LaurentPoly sign_term(int sign) {
    skip_ws();
    mpz_class coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_integer();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        return LaurentPoly::monomial(sign * coeff, 0);
      }
    }
    if (peek() != 'q') {
      if (have_coeff) fail("expected 'q' after '*'");
      fail("expected a term");
    }
    ++pos_;
    int exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      int esign = 1;
      if (peek() == '-') {
        esign = -1;
        ++pos_;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      exponent = esign * static_cast<int>(read_integer().get_si());
    }
    return LaurentPoly::monomial(sign * coeff, exponent);
  }

  mpz_class read_integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// Dense polynomials over Z, lowest degree first, no trailing zeros.
using Dense = std::vector<mpz_class>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const LaurentPoly& p, int shift) {
  Dense d(static_cast<std::size_t>(p.high_exponent() - shift) + 1, 0);
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - shift)] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
  LaurentPoly p;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) p += LaurentPoly::monomial(d[i], static_cast<int>(i) + shift);
  return p;
}

mpz_class content(const Dense& p) {
  mpz_class g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

Dense primitive(Dense p) {
  const mpz_class c = content(p);
  if (c > 1)
    for (auto& x : p) x /= c;
  return p;
}

// Pseudo-remainder of a by b.
Dense prem(Dense a, const Dense& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

Dense poly_gcd(Dense a, Dense b) {
  const mpz_class c = gcd(content(a), content(b));
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Dense r = prem(a, b);
    a = std::move(b);
    b = r.empty() ? Dense{} : primitive(std::move(r));
  }
  if (a.back() < 0)
    for (auto& x : a) x = -x;
  for (auto& x : a) x *= c;
  return a;
}

// Exact quotient a / b; b must divide a over Z.
Dense exact_divide(Dense a, const Dense& b) {
  if (b.size() > a.size()) throw std::logic_error("exact_divide: degree");
  Dense q(a.size() - b.size() + 1, 0);
  const mpz_class& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = a[k + b.size() - 1];
    if (top % lb != 0) throw std::logic_error("exact_divide: not divisible");
    q[k] = top / lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("exact_divide: nonzero remainder");
  return q;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  PolyParser p(text);
  return p.parse_all();
}

// ---- LaurentRational -----------------------------------------------------

LaurentRational::LaurentRational(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void LaurentRational::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int shift = num_.low_exponent() - den_.low_exponent();
  Dense f = to_dense(num_, num_.low_exponent());
  Dense g = to_dense(den_, den_.low_exponent());
  const Dense h = poly_gcd(f, g);
  if (!(h.size() == 1 && h[0] == 1)) {
    f = exact_divide(std::move(f), h);
    g = exact_divide(std::move(g), h);
  }
  if (g.back() < 0) {
    for (auto& x : f) x = -x;
    for (auto& x : g) x = -x;
  }
  num_ = from_dense(f, shift);
  den_ = from_dense(g, 0);
}

LaurentRational& LaurentRational::operator+=(const LaurentRational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

LaurentRational& LaurentRational::operator-=(const LaurentRational& o) { return *this += -o; }

LaurentRational& LaurentRational::operator*=(const LaurentRational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

LaurentRational& LaurentRational::operator/=(const LaurentRational& o) { return *this *= o.inverse(); }

LaurentRational LaurentRational::operator-() const {
  LaurentRational r = *this;
  r.num_ = -r.num_;
  return r;
}

LaurentRational LaurentRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return LaurentRational(den_, num_);
}

LaurentRational LaurentRational::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  LaurentRational result(1), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::string LaurentRational::to_string() const {
  if (is_laurent_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

LaurentRational LaurentRational::parse(const std::string& text) {
  PolyParser p(text);
  p.skip_ws();
  if (p.peek() != '(') return LaurentRational(p.parse_all());
  p.expect('(');
  LaurentPoly num = p.parse_sum();
  p.expect(')');
  p.skip_ws();
  if (p.peek() == '\0') return LaurentRational(num);
  p.expect('/');
  p.expect('(');
  LaurentPoly den = p.parse_sum();
  p.expect(')');
  p.skip_ws();
  if (p.peek() != '\0') p.fail("trailing characters");
  return LaurentRational(std::move(num), std::move(den));
}

LaurentRational q_integer(int n, const LaurentRational& base) {
  return (base.pow(n) - base.pow(-n)) / (base - base.inverse());
}

LaurentRational q_binomial(int m, int n, const LaurentRational& base) {
  if (n < 0 || n > m) throw std::invalid_argument("q_binomial requires 0 <= n <= m");
  LaurentRational r(1);
  for (int i = 0; i < n; ++i) r *= (base.pow(m - i) - base.pow(-(m - i))) / (base.pow(i + 1) - base.pow(-(i + 1)));
  return r;
}

bool is_in_A(const LaurentRational& x) { return x.is_zero() || x.numerator().low_exponent() >= 0; }

mpq_class evaluate_at_zero(const LaurentRational& x) {
  if (!is_in_A(x)) throw std::domain_error("value at q = 0 undefined: " + x.to_string() + " has a pole");
  if (x.is_zero()) return 0;
  mpq_class v(x.numerator().coefficient(0), x.denominator().coefficient(0));
  v.canonicalize();
  return v;
}

}  // namespace supercrystal
