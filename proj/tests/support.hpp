#pragma once

#include <gmpxx.h>

#include <string>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "descpoly/integer_set.hpp"
#include "descpoly/polynomial.hpp"

inline descpoly::IntegerSet S(const std::string& text) { return descpoly::IntegerSet::parse(text); }

inline std::vector<mpz_class> Z(std::initializer_list<long> values) {
  std::vector<mpz_class> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline descpoly::IntPolynomial P(std::initializer_list<long> values) {
  return descpoly::IntPolynomial::from_coefficients(Z(values));
}

// Full coefficient list, x^0 up to the degree.
inline std::vector<mpz_class> coeffs(const descpoly::IntPolynomial& p) { return p.coefficients(); }

namespace doctest {
template <>
struct StringMaker<std::vector<mpz_class>> {
  static String convert(const std::vector<mpz_class>& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
    out << ')';
    return out.str().c_str();
  }
};
template <>
struct StringMaker<descpoly::IntPolynomial> {
  static String convert(const descpoly::IntPolynomial& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
