#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace descpoly {

/// Univariate polynomial with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored; the zero polynomial has no terms.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  /// Coefficients listed from x^0 upward.
  static IntPolynomial from_coefficients(const std::vector<mpz_class>& coeffs);
  static IntPolynomial monomial(int exponent, const mpz_class& c = 1);
  static IntPolynomial constant(const mpz_class& c) { return monomial(0, c); }

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  mpz_class coeff(int exponent) const;
  void add_term(int exponent, const mpz_class& c);
  /// Dense coefficient list of length degree()+1 (empty for zero).
  std::vector<mpz_class> coefficients() const;
  /// Dense list padded (or truncated) to exactly len entries.
  std::vector<mpz_class> coefficients(int len) const;
  const std::map<int, mpz_class>& terms() const { return terms_; }

  mpz_class evaluate(const mpz_class& x) const;
  std::string to_string() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const mpz_class& c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& c) { return a *= c; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, mpz_class> terms_;
};

/// Polynomial in two variables with exponent pairs (first, second).
/// P_n^{X,Y}(x,y) uses (s, t) for x^s y^t; P_n^X(q,x) uses (s, k) for x^s q^k.
class BivarPolynomial {
 public:
  using Key = std::pair<int, int>;

  BivarPolynomial() = default;
  static BivarPolynomial monomial(int first, int second, const mpz_class& c = 1);

  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(int first, int second) const;
  void add_term(int first, int second, const mpz_class& c);
  const std::map<Key, mpz_class>& terms() const { return terms_; }

  /// Substitute a value for the second variable, leaving a polynomial in the first.
  IntPolynomial eval_second(const mpz_class& value) const;
  /// Substitute a value for the first variable, leaving a polynomial in the second.
  IntPolynomial eval_first(const mpz_class& value) const;
  std::string to_string(char first = 'x', char second = 'y') const;

  BivarPolynomial& operator+=(const BivarPolynomial& o);
  friend BivarPolynomial operator+(BivarPolynomial a, const BivarPolynomial& b) { return a += b; }
  friend BivarPolynomial operator*(const BivarPolynomial& a, const BivarPolynomial& b);
  friend bool operator==(const BivarPolynomial& a, const BivarPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Key, mpz_class> terms_;
};

}  // namespace descpoly
