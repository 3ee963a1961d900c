#include "descpoly/closed_forms.hpp"

#include "descpoly/arith.hpp"

namespace descpoly {
namespace {

mpz_class sign(int e) { return (e % 2 == 0) ? 1 : -1; }

mpz_class power(long base, unsigned long e) {
  mpz_class b = base, out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

mpz_class sum_terms(const std::vector<mpz_class>& terms) {
  mpz_class out = 0;
  for (const auto& t : terms) out += t;
  return out;
}

}  // namespace

FormulaTrace formula_alpha_beta_trace(int n, int s, const IntegerSet& X, const IntegerSet& Y) {
  const auto xs = X.members(n);
  const int c = n - static_cast<int>(xs.size());
  FormulaTrace tr;
  tr.prefactor = factorial(c);
  if (s < 0) return tr;
  std::vector<int> shift;  // alpha_{X,n,x} + beta_{Y,n,x}
  for (int x : xs) shift.push_back(alpha(X, n, x) + beta(Y, n, x));
  for (int r = 0; r <= s; ++r) {
    mpz_class t = sign(s - r) * binom(c + r, r) * binom(n + 1, s - r);
    for (int a : shift) t *= 1 + r + a;
    tr.terms.push_back(t);
  }
  tr.value = tr.prefactor * sum_terms(tr.terms);
  return tr;
}

mpz_class formula_alpha_beta(int n, int s, const IntegerSet& X, const IntegerSet& Y) {
  return formula_alpha_beta_trace(n, s, X, Y).value;
}

FormulaTrace formula_beta_beta_trace(int n, int s, const IntegerSet& X, const IntegerSet& Y) {
  const auto xs = X.members(n);
  const int size = static_cast<int>(xs.size());
  const int c = n - size;
  FormulaTrace tr;
  tr.prefactor = factorial(c);
  if (s < 0) return tr;
  const int top = size - s;
  std::vector<int> shift;  // beta_{X,n,x} - beta_{Y,n,x}
  for (int x : xs) shift.push_back(beta(X, n, x) - beta(Y, n, x));
  for (int r = 0; r <= top; ++r) {
    mpz_class t = sign(top - r) * binom(c + r, r) * binom(n + 1, top - r);
    for (int b : shift) t *= r + b;
    tr.terms.push_back(t);
  }
  tr.value = tr.prefactor * sum_terms(tr.terms);
  return tr;
}

mpz_class formula_beta_beta(int n, int s, const IntegerSet& X, const IntegerSet& Y) {
  return formula_beta_beta_trace(n, s, X, Y).value;
}

mpz_class formula_X_only_1(int n, int s, const IntegerSet& X) {
  const auto xs = X.members(n);
  const int c = n - static_cast<int>(xs.size());
  mpz_class sum = 0;
  for (int r = 0; r <= s; ++r) {
    mpz_class t = sign(s - r) * binom(c + r, r) * binom(n + 1, s - r);
    for (int x : xs) t *= 1 + r + alpha(X, n, x);
    sum += t;
  }
  return factorial(c) * sum;
}

mpz_class formula_X_only_2(int n, int s, const IntegerSet& X) {
  const auto xs = X.members(n);
  const int size = static_cast<int>(xs.size());
  const int c = n - size;
  const int top = size - s;
  mpz_class sum = 0;
  for (int r = 0; r <= top; ++r) {
    mpz_class t = sign(top - r) * binom(c + r, r) * binom(n + 1, top - r);
    // beta_{X,n,x_i} = x_i - i
    for (int i = 1; i <= size; ++i) t *= r + xs[static_cast<std::size_t>(i - 1)] - i;
    sum += t;
  }
  return factorial(c) * sum;
}

mpz_class eulerian(int n, int s) {
  mpz_class sum = 0;
  for (int r = 0; r <= s; ++r) sum += sign(s - r) * binom(n + 1, s - r) * power(1 + r, static_cast<unsigned long>(n));
  return sum;
}

mpz_class even_tops_product(int n, int s) {
  mpz_class f = factorial(n) * binom(n, s);
  return f * f;
}

std::pair<mpz_class, mpz_class> kn_top_formulas(int k, int n, int j, int s) {
  const int c = (k - 1) * n + j;
  const int size = k * n + j;
  mpz_class first = 0, second = 0;
  for (int r = 0; r <= s; ++r) {
    mpz_class t = sign(s - r) * binom(c + r, r) * binom(size + 1, s - r);
    for (int i = 0; i < n; ++i) t *= 1 + r + j + (k - 1) * i;
    first += t;
  }
  for (int r = 0; r <= n - s; ++r) {
    mpz_class t = sign(n - s - r) * binom(c + r, r) * binom(size + 1, n - s - r);
    for (int i = 1; i <= n; ++i) t *= r + (k - 1) * i;
    second += t;
  }
  return {factorial(c) * first, factorial(c) * second};
}

std::pair<mpz_class, mpz_class> kn_bottom_formulas(int k, int m, int j, int s) {
  const int c = (k - 1) * m + j;
  const int size = k * m + j;
  mpz_class first = 0, second = 0;
  for (int r = 0; r <= s; ++r) {
    mpz_class t = sign(s - r) * binom(c + r, r) * binom(size + 1, s - r);
    for (int i = 1; i <= m; ++i) t *= 1 + r + (k - 1) * i;
    first += t;
  }
  for (int r = 0; r <= m - s; ++r) {
    mpz_class t = sign(m - s - r) * binom(c + r, r) * binom(size + 1, m - s - r);
    for (int i = 0; i < m; ++i) t *= r + j + (k - 1) * i;
    second += t;
  }
  return {factorial(c) * first, factorial(c) * second};
}

mpz_class rectangle_product(int m, int u, int v, int s) {
  if (s < 0) return 0;
  return binom(m, s) * binom(m + u + v, v + s) * factorial(m + u) * factorial(m + v);
}

IntegerSet rectangle_set(int m, int u) {
  std::vector<int> e;
  for (int i = 1; i <= m; ++i) e.push_back(u + 2 * i);
  return IntegerSet::of(std::move(e));
}

}  // namespace descpoly
