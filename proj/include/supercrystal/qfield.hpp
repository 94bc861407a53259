// Exact arithmetic in Q(q): Laurent polynomials with arbitrary-precision
// integer coefficients and reduced ratios of them.
#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace supercrystal {

/// Sparse Laurent polynomial, exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): constants read naturally
  static LaurentPoly monomial(const mpz_class& c, int exponent);
  static LaurentPoly q() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  int low_exponent() const;   // requires !is_zero()
  int high_exponent() const;  // requires !is_zero()
  mpz_class coefficient(int exponent) const;
  const std::map<int, mpz_class>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  /// Multiply by q^k.
  LaurentPoly shifted(int k) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Terms in decreasing exponent order, e.g. "3*q^2 - q^-1 + 1".
  std::string to_string() const;
  static LaurentPoly parse(const std::string& text);

 private:
  std::map<int, mpz_class> terms_;
};

/// Element of Q(q) held in the unique form q^e f / g with f, g in Z[q],
/// f(0) != 0, g(0) != 0, gcd(f, g) = 1 and g of positive leading coefficient.
/// numerator() returns q^e f and denominator() returns g.
class LaurentRational {
 public:
  LaurentRational() : num_(0), den_(1) {}
  LaurentRational(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  LaurentRational(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  LaurentRational(LaurentPoly num, LaurentPoly den);

  static LaurentRational q_power(int k) { return LaurentRational(LaurentPoly::monomial(1, k)); }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent_polynomial() const { return den_ == LaurentPoly(1); }

  LaurentRational& operator+=(const LaurentRational& o);
  LaurentRational& operator-=(const LaurentRational& o);
  LaurentRational& operator*=(const LaurentRational& o);
  LaurentRational& operator/=(const LaurentRational& o);
  friend LaurentRational operator+(LaurentRational a, const LaurentRational& b) { return a += b; }
  friend LaurentRational operator-(LaurentRational a, const LaurentRational& b) { return a -= b; }
  friend LaurentRational operator*(LaurentRational a, const LaurentRational& b) { return a *= b; }
  friend LaurentRational operator/(LaurentRational a, const LaurentRational& b) { return a /= b; }
  LaurentRational operator-() const;
  LaurentRational inverse() const;
  LaurentRational pow(int k) const;

  /// Canonical forms are unique, so equality is representation equality.
  friend bool operator==(const LaurentRational& a, const LaurentRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;
  /// Accepts "<poly>" or "(<poly>)/(<poly>)".
  static LaurentRational parse(const std::string& text);

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

/// [m choose n]_t = prod_{i=0}^{n-1} (t^{m-i} - t^{-(m-i)}) / (t^{i+1} - t^{-(i+1)}).
/// Throws std::invalid_argument unless 0 <= n <= m.
LaurentRational q_binomial(int m, int n, const LaurentRational& base);

/// (t^n - t^{-n}) / (t - t^{-1}).
LaurentRational q_integer(int n, const LaurentRational& base);

/// Membership in the local ring A = { f/g : g(0) != 0 }.
bool is_in_A(const LaurentRational& x);
/// Value at q = 0; throws std::domain_error when x is not in A.
mpq_class evaluate_at_zero(const LaurentRational& x);

}  // namespace supercrystal
