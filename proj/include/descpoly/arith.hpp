#pragma once

#include <gmpxx.h>

#include <span>

#include "descpoly/integer_set.hpp"
#include "descpoly/word.hpp"

namespace descpoly {

/// Rising factorial (a)_r = a (a+1) ... (a+r-1); (a)_0 = 1.
mpz_class poch(long a, long r);

/// Binomial coefficient with C(p, q) = 0 when p < 0 or q > p.
mpz_class binom(long p, long q);

mpz_class factorial(long n);

/// n! / (k_1! k_2! ...) with n = sum of the k_i.
mpz_class multinomial(std::span<const int> parts);

/// alpha_{S,n,j}: number of z with j < z <= n and z not in S.
int alpha(const IntegerSet& S, int n, int j);

/// beta_{S,n,j}: number of z with 1 <= z < j and z not in S.
int beta(const IntegerSet& S, int n, int j);

/// Letter-weighted versions for words in R(rho):
/// alpha_{S,rho,x} = sum of rho_z over z not in S, x < z <= m.
int word_alpha(const IntegerSet& S, const CompositionSpec& rho, int x);
/// beta_{S,rho,x} = sum of rho_z over z not in S, 1 <= z < x.
int word_beta(const IntegerSet& S, const CompositionSpec& rho, int x);

}  // namespace descpoly
