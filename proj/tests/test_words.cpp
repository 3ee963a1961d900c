#include <doctest.h>

#include <set>

#include "descpoly/arith.hpp"
#include "descpoly/closed_forms.hpp"
#include "descpoly/stats.hpp"
#include "descpoly/words.hpp"
#include "support.hpp"

using namespace descpoly;

namespace {

// Naive word descent count, written out by hand.
int word_des(std::span<const int> w, const IntegerSet& X, const IntegerSet& Y) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1] && X.contains(w[i]) && Y.contains(w[i + 1])) ++d;
  }
  return d;
}

std::vector<Permutation> all_perms(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("rearrangement classes") {
  std::vector<std::string> seen;
  for (const auto& w : enumerate_rearrangements(CompositionSpec({1, 1}))) seen.push_back(w.to_string());
  CHECK(seen == std::vector<std::string>{"12", "21"});
  seen.clear();
  for (const auto& w : enumerate_rearrangements(CompositionSpec({2, 1}))) seen.push_back(w.to_string());
  CHECK(seen == std::vector<std::string>{"112", "121", "211"});

  const CompositionSpec big({2, 3, 1, 4, 2});
  const std::vector<int> target{4, 1, 2, 4, 4, 1, 3, 2, 5, 4, 2, 5};
  long count = 0;
  bool found = false;
  for_each_rearrangement(big, [&](const std::vector<int>& w) {
    ++count;
    found = found || w == target;
  });
  CHECK(found);
  CHECK(mpz_class(count) == rearrangement_count(big));
  CHECK(rearrangement_count(big) == 831600);
  CHECK_THROWS(for_each_rearrangement(big, [](const std::vector<int>&) {}, 1000));
}

TEST_CASE("all compositions") {
  CHECK(all_compositions(4).size() == 8);
  std::set<std::vector<int>> distinct;
  for (const auto& rho : all_compositions(5)) {
    CHECK(rho.n() == 5);
    distinct.emplace(rho.parts().begin(), rho.parts().end());
  }
  CHECK(distinct.size() == 16);
}

TEST_CASE("word brute force against a hand-written count") {
  const CompositionSpec rho({2, 3, 1, 2});
  const IntegerSet X = S("{2,4}"), Y = S("{1,2,3}");
  IntPolynomial naive;
  for_each_rearrangement(rho, [&](const std::vector<int>& w) { naive.add_term(word_des(w, X, Y), 1); });
  CHECK(word_brute_poly(rho, X, Y) == naive);
  CHECK(naive.evaluate(1) == rearrangement_count(rho));
  CHECK(coeffs(word_brute_poly(CompositionSpec({4}), S("all"), S("all"))) == Z({1}));
}

TEST_CASE("permutations are words with all parts 1") {
  for (int n = 1; n <= 4; ++n) {
    for (unsigned xm = 0; xm < (1U << n); ++xm) {
      for (unsigned ym = 0; ym < (1U << n); ++ym) {
        const auto X = IntegerSet::from_mask(xm), Y = IntegerSet::from_mask(ym);
        CHECK(word_brute_poly(CompositionSpec::ones(n), X, Y) == brute_poly(n, DescentQuery{X, Y}));
        for (int s = 0; s <= n; ++s) {
          CHECK(word_formula_1(CompositionSpec::ones(n), s, X, Y) == formula_alpha_beta(n, s, X, Y));
          CHECK(word_formula_2(CompositionSpec::ones(n), s, X, Y) == formula_beta_beta(n, s, X, Y));
        }
      }
    }
  }
}

TEST_CASE("word formulas on worked compositions") {
  struct Case {
    CompositionSpec rho;
    IntegerSet X, Y;
  };
  const std::vector<Case> cases{{CompositionSpec({2, 3, 1, 4, 2}), S("{2,3,5}"), S("{1,3,4}")},
                                {CompositionSpec({2, 1, 3, 2, 1, 1}), S("{2,3,6}"), S("{1,2,5}")}};
  for (const auto& c : cases) {
    const auto p = word_brute_poly(c.rho, c.X, c.Y);
    CHECK(p.evaluate(1) == rearrangement_count(c.rho));
    for (int s = 0; s <= c.rho.n(); ++s) {
      CHECK(word_formula_1(c.rho, s, c.X, c.Y) == p.coeff(s));
      CHECK(word_formula_2(c.rho, s, c.X, c.Y) == p.coeff(s));
    }
  }
}

TEST_CASE("two letters with X = {2}") {
  for (int a = 1; a <= 7; ++a) {
    for (int b = 1; a + b <= 8; ++b) {
      const CompositionSpec rho({a, b});
      const auto p = word_brute_poly(rho, S("{2}"), S("all"));
      for (int s = 0; s <= a + b; ++s) {
        CHECK(two_letter_product(a, b, s) == p.coeff(s));
        CHECK(word_formula_1(rho, s, S("{2}"), S("all")) == p.coeff(s));
      }
    }
  }
}

TEST_CASE("equal parts with X even") {
  for (int n = 1; n <= 2; ++n) {
    const CompositionSpec rho(std::vector<int>(static_cast<std::size_t>(2 * n), 2));
    const auto p = word_brute_poly(rho, IntegerSet::evens(), S("all"));
    for (int s = 0; s <= 4 * n; ++s) CHECK(equal_parts_even_product(2, n, s) == p.coeff(s));
  }
}

TEST_CASE("Y = all word formulas") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& rho : all_compositions(n)) {
      for (unsigned xm = 0; xm < (1U << rho.m()); ++xm) {
        const auto X = IntegerSet::from_mask(xm);
        const auto p = word_brute_poly(rho, X, S("all"));
        for (int s = 0; s <= n; ++s) {
          CHECK(word_formula_X_only_1(rho, s, X) == p.coeff(s));
          CHECK(word_formula_X_only_2(rho, s, X) == p.coeff(s));
        }
      }
    }
  }
}

TEST_CASE("the Y = all second formula needs C(n+1, n-a-s-r), not C(n+1, s-r)") {
  const CompositionSpec rho({2, 1, 2});
  const IntegerSet X = S("{2,3}");
  const WordStatContext ctx(rho, X, S("all"));
  const int n = rho.n();
  const auto p = word_brute_poly(rho, X, S("all"));
  bool differs = false;
  for (int s = 0; s <= n - ctx.a; ++s) {
    const int top = n - ctx.a - s;
    mpz_class printed = 0;
    for (int r = 0; r <= top; ++r) {
      mpz_class t = binom(ctx.a + r, r) * binom(n + 1, s - r);
      for (int x : ctx.x_letters) t *= binom(r + ctx.beta_X(x), rho.part(x));
      printed += (top - r) % 2 ? mpz_class(-t) : t;
    }
    printed *= ctx.multinomial;
    differs = differs || printed != p.coeff(s);
    CHECK(word_formula_X_only_2(rho, s, X) == p.coeff(s));
  }
  CHECK(differs);
}

TEST_CASE("scaled identity between words and permutations") {
  // holds for rho = (3,3,3,3) and X even
  const CompositionSpec rho({3, 3, 3, 3});
  for (int s = 0; s <= 12; ++s) {
    const mpz_class scaled = mpz_class(1296) * word_formula_1(rho, s, IntegerSet::evens(), S("all"));
    CHECK(scaled == even_tops_product(6, s));
    CHECK(scaled == formula_X_only_1(12, s, IntegerSet::evens()));
  }
  // fails for rho = (2,2), X = all against n = 4
  const auto words = word_brute_poly(CompositionSpec({2, 2}), S("all"), S("all"));
  const auto perms = brute_poly(4, DescentQuery{});
  CHECK(coeffs(words * mpz_class(4)) == Z({4, 16, 4}));
  CHECK_FALSE(words * mpz_class(4) == perms);
}

TEST_CASE("standardization") {
  const auto w = Word::from_letters({4, 1, 4, 2, 1, 3, 2, 3});
  const auto sw = standardize(w);
  CHECK(sw.to_string() == "71832546");
  const DescentQuery even_tops{IntegerSet::evens(), S("all")};
  // 41, 42 and 21 have even tops; std(w) keeps only 83
  CHECK(des_count(w.letters(), even_tops) == 3);
  CHECK(des_count(sw.values(), even_tops) == 1);
  const DescentQuery even_odd{IntegerSet::evens(), IntegerSet::odds()};
  CHECK(des_count(w.letters(), even_odd) == 2);
  CHECK(des_count(sw.values(), even_odd) == 1);
}

TEST_CASE("chi") {
  const auto w = Word::from_letters({1, 2, 2, 1, 2});
  CHECK(chi({Permutation::parse("21"), Permutation::parse("312")}, w).to_string() == "25314");
  CHECK_THROWS(chi({Permutation::parse("21")}, w));
  // (phi, w) -> chi is a bijection onto S_n
  for (const auto& rho : {CompositionSpec({2, 3}), CompositionSpec({1, 2, 2}), CompositionSpec({3, 1, 2})}) {
    std::set<Permutation> images;
    long pairs = 0;
    const auto words = enumerate_rearrangements(rho);
    std::vector<std::vector<Permutation>> choices;
    for (int l = 1; l <= rho.m(); ++l) choices.push_back(all_perms(rho.part(l)));
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      std::vector<Permutation> phis;
      for (std::size_t l = 0; l < choices.size(); ++l) phis.push_back(choices[l][idx[l]]);
      for (const auto& word : words) {
        images.insert(chi(phis, word));
        ++pairs;
      }
      std::size_t l = 0;
      while (l < idx.size() && ++idx[l] == choices[l].size()) idx[l++] = 0;
      if (l == idx.size()) break;
    }
    CHECK(static_cast<long>(images.size()) == pairs);
    CHECK(mpz_class(pairs) == factorial(rho.n()));
  }
}
