#include <doctest.h>

#include <random>

#include "descpoly/arith.hpp"
#include "descpoly/closed_forms.hpp"
#include "descpoly/stats.hpp"
#include "support.hpp"

using namespace descpoly;

namespace {

mpz_class brute(int n, int s, const IntegerSet& X, const IntegerSet& Y = IntegerSet::all()) {
  return brute_poly(n, DescentQuery{X, Y}).coeff(s);
}

// The first alternating sum with the product factors supplied by the caller.
std::vector<mpz_class> first_sum_terms(int n, int s, int a, const std::vector<int>& offsets) {
  std::vector<mpz_class> terms;
  for (int r = 0; r <= s; ++r) {
    mpz_class t = binom(a + r, r) * binom(n + 1, s - r);
    for (int o : offsets) t *= 1 + r + o;
    terms.push_back((s - r) % 2 ? mpz_class(-t) : t);
  }
  return terms;
}

}  // namespace

TEST_CASE("introductory example traces") {
  const auto X = S("{2,3,4,6,7,9}");
  const auto Y = S("{1,4,8}");
  const auto t1 = formula_alpha_beta_trace(6, 2, X, Y);
  CHECK(t1.prefactor == 2);
  CHECK(t1.terms == Z({2016, -6300, 4320}));
  CHECK(t1.value == 72);
  const auto t2 = formula_beta_beta_trace(6, 2, X, Y);
  CHECK(t2.prefactor == 2);
  CHECK(t2.terms == Z({0, 0, 36}));
  CHECK(t2.value == 72);
  CHECK(t1.value == brute(6, 2, X, Y));
}

TEST_CASE("beta_{Y,6,6} = 2 reproduces the printed terms 1512, -5040, 3600") {
  // alpha_{X,6,x} + beta_{Y,6,x} for x = 2, 3, 4, 6 is 1, 2, 3, 3; with beta_{Y,6,6} = 2 the last is 2
  CHECK(first_sum_terms(6, 2, 2, {1, 2, 3, 3}) == Z({2016, -6300, 4320}));
  CHECK(first_sum_terms(6, 2, 2, {1, 2, 3, 2}) == Z({1512, -5040, 3600}));
  CHECK(beta(S("{1,4,8}"), 6, 6) == 3);
}

TEST_CASE("formulas match brute force on the worked cases") {
  CHECK(formula_alpha_beta(3, 1, S("all"), S("all")) == 4);
  CHECK(formula_alpha_beta(6, 7, S("all"), S("all")) == 0);
  CHECK(formula_beta_beta(6, 3, S("{2,3,4}"), S("{1,3,5}")) == 0);
  CHECK(formula_beta_beta(5, 1, S("{2,3,5}"), S("{1,3,4}")) == 72);
  CHECK(formula_X_only_1(3, 0, S("{}")) == 6);
  CHECK(formula_X_only_2(3, 0, S("{}")) == 6);
}

TEST_CASE("both formulas equal brute force for every pair with n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (unsigned xm = 0; xm < (1U << n); ++xm) {
      const auto X = IntegerSet::from_mask(xm);
      for (unsigned ym = 0; ym < (1U << n); ++ym) {
        const auto Y = IntegerSet::from_mask(ym);
        const auto p = brute_poly(n, DescentQuery{X, Y});
        for (int s = 0; s <= n; ++s) {
          CHECK(formula_alpha_beta(n, s, X, Y) == p.coeff(s));
          CHECK(formula_beta_beta(n, s, X, Y) == p.coeff(s));
        }
        // vanishing tail
        for (int s = X.count_upto(n) + 1; s <= n + 2; ++s) CHECK(formula_alpha_beta(n, s, X, Y) == 0);
      }
    }
  }
}

TEST_CASE("Y = all specializations") {
  for (int n = 1; n <= 6; ++n) {
    for (unsigned xm = 0; xm < (1U << n); ++xm) {
      const auto X = IntegerSet::from_mask(xm);
      for (int s = 0; s <= n; ++s) {
        const mpz_class general = formula_alpha_beta(n, s, X, S("all"));
        CHECK(formula_X_only_1(n, s, X) == general);
        CHECK(formula_X_only_2(n, s, X) == general);
      }
    }
  }
}

TEST_CASE("x_i - beta_{Y,n,x_i} is nondecreasing") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto X = IntegerSet::from_mask(rng() & 0xfff), Y = IntegerSet::from_mask(rng() & 0xfff);
    int prev = -1000;
    for (int x : X.members(n)) {
      const int v = x - beta(Y, n, x);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("Eulerian numbers") {
  for (int n = 1; n <= 8; ++n) {
    const auto p = brute_poly(n, DescentQuery{});
    for (int s = 0; s <= n; ++s) CHECK(eulerian(n, s) == p.coeff(s));
  }
}

TEST_CASE("even tops product") {
  for (int n = 1; n <= 4; ++n) {
    for (int s = 0; s <= n; ++s) {
      CHECK(even_tops_product(n, s) == brute(2 * n, s, IntegerSet::evens()));
      CHECK(formula_X_only_1(2 * n, s, IntegerSet::evens()) == even_tops_product(n, s));
    }
  }
}

TEST_CASE("kN formulas for tops and bottoms") {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; k * n <= 7; ++n) {
      for (int j = 0; j < k && k * n + j <= 7; ++j) {
        const int N = k * n + j;
        const auto tops = brute_poly(N, DescentQuery{IntegerSet::multiples_of(k), S("all")});
        const auto bottoms = brute_poly(N, DescentQuery{S("all"), IntegerSet::multiples_of(k)});
        for (int s = 0; s <= N; ++s) {
          const auto [t1, t2] = kn_top_formulas(k, n, j, s);
          CHECK(t1 == tops.coeff(s));
          CHECK(t2 == tops.coeff(s));
          const auto [b1, b2] = kn_bottom_formulas(k, n, j, s);
          CHECK(b1 == bottoms.coeff(s));
          CHECK(b2 == bottoms.coeff(s));
        }
      }
    }
  }
}

TEST_CASE("rectangle product") {
  CHECK(rectangle_set(2, 1).members(6) == std::vector<int>{3, 5});
  CHECK(rectangle_product(2, 1, 1, 1) == brute(6, 1, S("{3,5}")));
  CHECK(rectangle_product(1, 0, 0, 2) == 0);
  for (int n = 1; n <= 4; ++n) {
    for (int s = 0; s <= n; ++s) CHECK(rectangle_product(n, 0, 0, s) == even_tops_product(n, s));
  }
  for (int m = 1; m <= 5; ++m) {
    for (int u = 0; m + u <= 5; ++u) {
      for (int v = 0; m + u + v <= 5; ++v) {
        const int n = 2 * m + u + v;
        for (int s = 0; s <= n; ++s) {
          CHECK(rectangle_product(m, u, v, s) == formula_X_only_1(n, s, rectangle_set(m, u)));
          if (n <= 8) CHECK(rectangle_product(m, u, v, s) == brute(n, s, rectangle_set(m, u)));
        }
      }
    }
  }
}
