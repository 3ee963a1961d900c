#include "descpoly/arith.hpp"

namespace descpoly {

mpz_class poch(long a, long r) {
  mpz_class out = 1;
  for (long i = 0; i < r; ++i) {
    out *= a + i;
    if (out == 0) break;
  }
  return out;
}

mpz_class binom(long p, long q) {
  if (p < 0 || q < 0 || q > p) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
  return out;
}

mpz_class factorial(long n) {
  if (n < 0) return 0;
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class multinomial(std::span<const int> parts) {
  mpz_class out = 1;
  long total = 0;
  for (int k : parts) {
    total += k;
    out *= binom(total, k);
  }
  return out;
}

int alpha(const IntegerSet& S, int n, int j) {
  int count = 0;
  for (int z = j + 1; z <= n; ++z) {
    if (!S.contains(z)) ++count;
  }
  return count;
}

int beta(const IntegerSet& S, int /*n*/, int j) {
  int count = 0;
  for (int z = 1; z < j; ++z) {
    if (!S.contains(z)) ++count;
  }
  return count;
}

int word_alpha(const IntegerSet& S, const CompositionSpec& rho, int x) {
  int sum = 0;
  for (int z = x + 1; z <= rho.m(); ++z) {
    if (!S.contains(z)) sum += rho.part(z);
  }
  return sum;
}

int word_beta(const IntegerSet& S, const CompositionSpec& rho, int x) {
  int sum = 0;
  for (int z = 1; z < x && z <= rho.m(); ++z) {
    if (!S.contains(z)) sum += rho.part(z);
  }
  return sum;
}

}  // namespace descpoly
