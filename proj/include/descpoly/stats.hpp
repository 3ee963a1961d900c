#pragma once

#include <span>
#include <vector>

#include "descpoly/integer_set.hpp"
#include "descpoly/permutation.hpp"
#include "descpoly/polynomial.hpp"

namespace descpoly {

inline constexpr int kDefaultBruteCap = 10;

/// Tops X, bottoms Y and differences Z of the descents being counted.
struct DescentQuery {
  IntegerSet X = IntegerSet::all();
  IntegerSet Y = IntegerSet::all();
  IntegerSet Z = IntegerSet::all();

  bool z_is_all() const { return std::holds_alternative<IntegerSet::All>(Z.representation()); }
  /// a > b, a in X, b in Y, a - b in Z
  bool is_descent(int a, int b) const { return a > b && X.contains(a) && Y.contains(b) && Z.contains(a - b); }
};

/// Positions i (1-based) where (w_i, w_{i+1}) is a descent of the query.
std::vector<int> des_set(std::span<const int> letters, const DescentQuery& q);
inline std::vector<int> des_set(const Permutation& sigma, const DescentQuery& q) { return des_set(sigma.values(), q); }
int des_count(std::span<const int> letters, const DescentQuery& q);

/// Sum over S_n of x^{des}. Throws LimitExceeded when n > cap.
IntPolynomial brute_poly(int n, const DescentQuery& q, int cap = kDefaultBruteCap);

/// Sum over S_n of x^{des_{X,Y}} y^{|Y_n^c|}.
BivarPolynomial brute_bivar(int n, const IntegerSet& X, const IntegerSet& Y, int cap = kDefaultBruteCap);

/// P_n^{X,Y}(x,y) by the insertion recursion in operator form, starting from P_0 = 1.
BivarPolynomial recursion_bivar(int n, const IntegerSet& X, const IntegerSet& Y);

/// The same polynomial from the four-case recursion on the coefficients P_{n,s,t}.
BivarPolynomial coefficient_recursion_bivar(int n, const IntegerSet& X, const IntegerSet& Y);

/// P_n^X(q,x); keys are (power of x, power of q).
BivarPolynomial q_recursion(int n, const IntegerSet& X);

/// X* = { n+1-x : x in X_n }.
IntegerSet q_complement_reverse(int n, const IntegerSet& X);

}  // namespace descpoly
