#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "descpoly/integer_set.hpp"

namespace descpoly {

/// An alternating sum written as prefactor * (terms[0] + terms[1] + ...),
/// with terms listed by increasing r and carrying their signs.
struct FormulaTrace {
  mpz_class prefactor = 1;
  std::vector<mpz_class> terms;
  mpz_class value = 0;
};

/// |X_n^c|! sum_{r=0}^{s} (-1)^{s-r} C(|X_n^c|+r, r) C(n+1, s-r) prod_{x in X_n} (1 + r + alpha_{X,n,x} + beta_{Y,n,x})
FormulaTrace formula_alpha_beta_trace(int n, int s, const IntegerSet& X, const IntegerSet& Y);
mpz_class formula_alpha_beta(int n, int s, const IntegerSet& X, const IntegerSet& Y);

/// |X_n^c|! sum_{r=0}^{|X_n|-s} (-1)^{|X_n|-s-r} C(|X_n^c|+r, r) C(n+1, |X_n|-s-r) prod_{x in X_n} (r + beta_{X,n,x} - beta_{Y,n,x})
FormulaTrace formula_beta_beta_trace(int n, int s, const IntegerSet& X, const IntegerSet& Y);
mpz_class formula_beta_beta(int n, int s, const IntegerSet& X, const IntegerSet& Y);

/// Y = N versions: products (1 + r + alpha_{X,n,x}) and (r + beta_{X,n,x}).
mpz_class formula_X_only_1(int n, int s, const IntegerSet& X);
mpz_class formula_X_only_2(int n, int s, const IntegerSet& X);

/// sum_{r=0}^{s} (-1)^{s-r} C(n+1, s-r) (1+r)^n
mpz_class eulerian(int n, int s);

/// (n!)^2 C(n,s)^2, the number of sigma in S_{2n} with s even-topped descents.
mpz_class even_tops_product(int n, int s);

/// Both alternating sums for P_{kn+j,s} with X = kN; the pair entries must agree.
std::pair<mpz_class, mpz_class> kn_top_formulas(int k, int n, int j, int s);

/// Both alternating sums for Q_{km+j,s} (descent bottoms in kN), via X* = {1+j, 1+j+k, ...}.
std::pair<mpz_class, mpz_class> kn_bottom_formulas(int k, int m, int j, int s);

/// C(m,s) C(m+u+v, v+s) (m+u)! (m+v)!, equal to P_{2m+u+v,s} for X = {u+2, u+4, ..., u+2m}.
mpz_class rectangle_product(int m, int u, int v, int s);

/// The set {u+2, u+4, ..., u+2m}.
IntegerSet rectangle_set(int m, int u);

}  // namespace descpoly
