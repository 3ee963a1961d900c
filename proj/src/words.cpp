#include "descpoly/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "descpoly/arith.hpp"
#include "descpoly/errors.hpp"
#include "descpoly/stats.hpp"

namespace descpoly {
namespace {

mpz_class sign(int e) { return (e % 2 == 0) ? 1 : -1; }

std::vector<int> offsets(const CompositionSpec& rho) {
  std::vector<int> off(static_cast<std::size_t>(rho.m()) + 1, 0);
  for (int i = 2; i <= rho.m(); ++i) off[i] = off[i - 1] + rho.part(i - 1);
  return off;
}

}  // namespace

std::vector<CompositionSpec> all_compositions(int n) {
  std::vector<CompositionSpec> out;
  if (n < 1) return out;
  // bit i of cuts set means a part ends after position i+1
  for (unsigned cuts = 0; cuts < (1U << (n - 1)); ++cuts) {
    std::vector<int> parts;
    int len = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (cuts >> i & 1U) {
        parts.push_back(len);
        len = 1;
      } else {
        ++len;
      }
    }
    parts.push_back(len);
    out.emplace_back(std::move(parts));
  }
  return out;
}

mpz_class rearrangement_count(const CompositionSpec& rho) { return multinomial(rho.parts()); }

void for_each_rearrangement(const CompositionSpec& rho, const std::function<void(const std::vector<int>&)>& visit,
                            long cap) {
  if (rearrangement_count(rho) > cap) {
    throw LimitExceeded("R(" + rho.to_string() + ") has more than " + std::to_string(cap) + " words");
  }
  auto w = rho.sorted_letters();
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Word> enumerate_rearrangements(const CompositionSpec& rho, long cap) {
  std::vector<Word> out;
  for_each_rearrangement(rho, [&](const std::vector<int>& w) { out.emplace_back(rho, w); }, cap);
  return out;
}

IntPolynomial word_brute_poly(const CompositionSpec& rho, const IntegerSet& X, const IntegerSet& Y, long cap) {
  const DescentQuery q{X, Y, IntegerSet::all()};
  const auto stride = static_cast<std::size_t>(rho.m()) + 1;
  std::vector<char> table(stride * stride, 0);
  for (int a = 1; a <= rho.m(); ++a) {
    for (int b = 1; b < a; ++b) table[static_cast<std::size_t>(a) * stride + static_cast<std::size_t>(b)] = q.is_descent(a, b);
  }
  std::vector<long> hist(static_cast<std::size_t>(rho.n()) + 1, 0);
  for_each_rearrangement(
      rho,
      [&](const std::vector<int>& w) {
        int d = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) d += table[static_cast<std::size_t>(w[i]) * stride + static_cast<std::size_t>(w[i + 1])];
        ++hist[static_cast<std::size_t>(d)];
      },
      cap);
  IntPolynomial out;
  for (std::size_t s = 0; s < hist.size(); ++s) out.add_term(static_cast<int>(s), hist[s]);
  return out;
}

WordStatContext::WordStatContext(CompositionSpec rho_, IntegerSet X_, IntegerSet Y_)
    : rho(std::move(rho_)), X(std::move(X_)), Y(std::move(Y_)) {
  std::vector<int> outside;
  for (int v = 1; v <= rho.m(); ++v) {
    if (X.contains(v)) {
      x_letters.push_back(v);
    } else {
      outside.push_back(rho.part(v));
      a += rho.part(v);
    }
  }
  multinomial = descpoly::multinomial(outside);
}

int WordStatContext::alpha_X(int x) const { return word_alpha(X, rho, x); }
int WordStatContext::beta_X(int x) const { return word_beta(X, rho, x); }
int WordStatContext::beta_Y(int x) const { return word_beta(Y, rho, x); }

mpz_class word_formula_1(const CompositionSpec& rho, int s, const IntegerSet& X, const IntegerSet& Y) {
  const WordStatContext ctx(rho, X, Y);
  const int n = rho.n();
  mpz_class sum = 0;
  for (int r = 0; r <= s; ++r) {
    mpz_class t = sign(s - r) * binom(ctx.a + r, r) * binom(n + 1, s - r);
    for (int x : ctx.x_letters) t *= binom(rho.part(x) + r + ctx.alpha_X(x) + ctx.beta_Y(x), rho.part(x));
    sum += t;
  }
  return ctx.multinomial * sum;
}

mpz_class word_formula_2(const CompositionSpec& rho, int s, const IntegerSet& X, const IntegerSet& Y) {
  const WordStatContext ctx(rho, X, Y);
  const int n = rho.n();
  const int top = n - ctx.a - s;
  mpz_class sum = 0;
  for (int r = 0; r <= top; ++r) {
    mpz_class t = sign(top - r) * binom(ctx.a + r, r) * binom(n + 1, top - r);
    for (int x : ctx.x_letters) t *= binom(r + ctx.beta_X(x) - ctx.beta_Y(x), rho.part(x));
    sum += t;
  }
  return ctx.multinomial * sum;
}

mpz_class word_formula_X_only_1(const CompositionSpec& rho, int s, const IntegerSet& X) {
  const WordStatContext ctx(rho, X, IntegerSet::all());
  const int n = rho.n();
  mpz_class sum = 0;
  for (int r = 0; r <= s; ++r) {
    mpz_class t = sign(s - r) * binom(ctx.a + r, r) * binom(n + 1, s - r);
    for (int x : ctx.x_letters) t *= binom(rho.part(x) + r + ctx.alpha_X(x), rho.part(x));
    sum += t;
  }
  return ctx.multinomial * sum;
}

mpz_class word_formula_X_only_2(const CompositionSpec& rho, int s, const IntegerSet& X) {
  const WordStatContext ctx(rho, X, IntegerSet::all());
  const int n = rho.n();
  const int top = n - ctx.a - s;
  mpz_class sum = 0;
  for (int r = 0; r <= top; ++r) {
    // the binomial C(n+1, n-a-s-r) here, not C(n+1, s-r)
    mpz_class t = sign(top - r) * binom(ctx.a + r, r) * binom(n + 1, top - r);
    for (int x : ctx.x_letters) t *= binom(r + ctx.beta_X(x), rho.part(x));
    sum += t;
  }
  return ctx.multinomial * sum;
}

mpz_class two_letter_product(int a, int b, int s) { return binom(a, s) * binom(b, s); }

mpz_class equal_parts_even_product(int k, int n, int s) {
  std::vector<int> parts(static_cast<std::size_t>(n), k);
  mpz_class t = multinomial(parts) * binom(static_cast<long>(k) * n, s);
  return t * t;
}

Permutation standardize(const Word& w) {
  const auto off = offsets(w.parent());
  std::vector<int> seen(off.size(), 0);
  std::vector<int> out;
  for (int l : w.letters()) out.push_back(off[l] + ++seen[l]);
  return Permutation(std::move(out));
}

Permutation chi(const std::vector<Permutation>& phis, const Word& w) {
  const auto& rho = w.parent();
  if (static_cast<int>(phis.size()) != rho.m()) throw std::invalid_argument("chi needs one permutation per letter");
  for (int l = 1; l <= rho.m(); ++l) {
    if (phis[static_cast<std::size_t>(l - 1)].size() != rho.part(l)) {
      throw std::invalid_argument("phi^(" + std::to_string(l) + ") must be a permutation of [" +
                                  std::to_string(rho.part(l)) + "]");
    }
  }
  const auto off = offsets(rho);
  std::vector<int> seen(off.size(), 0);
  std::vector<int> out;
  for (int l : w.letters()) out.push_back(off[l] + phis[static_cast<std::size_t>(l - 1)](++seen[l]));
  return Permutation(std::move(out));
}

}  // namespace descpoly
