#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "descpoly/integer_set.hpp"
#include "descpoly/permutation.hpp"
#include "descpoly/polynomial.hpp"
#include "descpoly/word.hpp"

namespace descpoly {

inline constexpr long kDefaultWordCap = 1000000;

/// All 2^{n-1} compositions of n.
std::vector<CompositionSpec> all_compositions(int n);

/// |R(rho)| = n! / (rho_1! ... rho_m!)
mpz_class rearrangement_count(const CompositionSpec& rho);

/// Visits every word of R(rho) once, in lexicographic order.
/// Throws LimitExceeded when |R(rho)| > cap.
void for_each_rearrangement(const CompositionSpec& rho, const std::function<void(const std::vector<int>&)>& visit,
                            long cap = kDefaultWordCap);
std::vector<Word> enumerate_rearrangements(const CompositionSpec& rho, long cap = kDefaultWordCap);

/// Sum over R(rho) of x^{des_{X,Y}(w)}.
IntPolynomial word_brute_poly(const CompositionSpec& rho, const IntegerSet& X, const IntegerSet& Y,
                              long cap = kDefaultWordCap);

/// The quantities shared by both word formulas.
struct WordStatContext {
  CompositionSpec rho;
  IntegerSet X, Y;
  std::vector<int> x_letters;  // X_m in increasing order
  int a = 0;                   // total multiplicity of letters outside X
  mpz_class multinomial;       // C(a; rho_{v_1}, ..., rho_{v_b})

  WordStatContext(CompositionSpec rho, IntegerSet X, IntegerSet Y);
  int alpha_X(int x) const;
  int beta_X(int x) const;
  int beta_Y(int x) const;
};

/// multinomial * sum_{r=0}^{s} (-1)^{s-r} C(a+r,r) C(n+1,s-r) prod_x C(rho_x + r + alpha_{X,rho,x} + beta_{Y,rho,x}, rho_x)
mpz_class word_formula_1(const CompositionSpec& rho, int s, const IntegerSet& X, const IntegerSet& Y);

/// multinomial * sum_{r=0}^{n-a-s} (-1)^{n-a-s-r} C(a+r,r) C(n+1,n-a-s-r) prod_x C(r + beta_{X,rho,x} - beta_{Y,rho,x}, rho_x)
mpz_class word_formula_2(const CompositionSpec& rho, int s, const IntegerSet& X, const IntegerSet& Y);

/// Y = N specializations of the two word formulas.
mpz_class word_formula_X_only_1(const CompositionSpec& rho, int s, const IntegerSet& X);
mpz_class word_formula_X_only_2(const CompositionSpec& rho, int s, const IntegerSet& X);

/// C(a,s) C(b,s): words with a ones and b twos, X = {2}.
mpz_class two_letter_product(int a, int b, int s);

/// C(kn; k,...,k)^2 C(kn,s)^2: rho = (k,...,k) with 2n parts, X = 2N.
mpz_class equal_parts_even_product(int k, int n, int s);

/// Replace the i-th occurrence (left to right) of letter L by rho_1 + ... + rho_{L-1} + i.
Permutation standardize(const Word& w);

/// Replace the i-th occurrence of letter L by rho_1 + ... + rho_{L-1} + phi^{(L)}_i,
/// where phi^{(L)} is a permutation of [rho_L].
Permutation chi(const std::vector<Permutation>& phis, const Word& w);

}  // namespace descpoly
