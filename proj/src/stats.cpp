#include "descpoly/stats.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "descpoly/errors.hpp"

namespace descpoly {
namespace {

// table[a * (n+1) + b] == 1 iff (a, b) is a descent pair of the query
std::vector<char> descent_table(int n, const DescentQuery& q) {
  const auto stride = static_cast<std::size_t>(n) + 1;
  std::vector<char> t(stride * stride, 0);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b < a; ++b) t[static_cast<std::size_t>(a) * stride + static_cast<std::size_t>(b)] = q.is_descent(a, b);
  }
  return t;
}

// [m]_q as a list of (power of q) with unit coefficients
void add_qint(BivarPolynomial& out, int xpow, int qshift, int m, const mpz_class& c) {
  for (int k = 0; k < m; ++k) out.add_term(xpow, qshift + k, c);
}

}  // namespace

std::vector<int> des_set(std::span<const int> letters, const DescentQuery& q) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (q.is_descent(letters[i], letters[i + 1])) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int des_count(std::span<const int> letters, const DescentQuery& q) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) c += q.is_descent(letters[i], letters[i + 1]);
  return c;
}

IntPolynomial brute_poly(int n, const DescentQuery& q, int cap) {
  if (n > cap) {
    throw LimitExceeded("brute force over S_" + std::to_string(n) + " exceeds cap n <= " + std::to_string(cap));
  }
  if (n <= 0) return IntPolynomial::constant(1);
  const auto table = descent_table(n, q);
  const auto stride = static_cast<std::size_t>(n) + 1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n), 0);
  do {
    int d = 0;
    for (int i = 0; i + 1 < n; ++i) d += table[static_cast<std::size_t>(perm[i]) * stride + static_cast<std::size_t>(perm[i + 1])];
    ++hist[static_cast<std::size_t>(d)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  IntPolynomial out;
  for (std::size_t s = 0; s < hist.size(); ++s) {
    mpz_class c;
    mpz_import(c.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &hist[s]);
    out.add_term(static_cast<int>(s), c);
  }
  return out;
}

BivarPolynomial brute_bivar(int n, const IntegerSet& X, const IntegerSet& Y, int cap) {
  const IntPolynomial p = brute_poly(n, DescentQuery{X, Y, IntegerSet::all()}, cap);
  const int t = Y.complement_in(n).count_upto(n);
  BivarPolynomial out;
  for (const auto& [s, c] : p.terms()) out.add_term(s, t, c);
  return out;
}

BivarPolynomial recursion_bivar(int n, const IntegerSet& X, const IntegerSet& Y) {
  BivarPolynomial p = BivarPolynomial::monomial(0, 0);
  // step from size m to size m+1
  for (int m = 0; m < n; ++m) {
    const bool top = X.contains(m + 1);
    const int ybump = Y.contains(m + 1) ? 0 : 1;
    BivarPolynomial next;
    for (const auto& [key, c] : p.terms()) {
      const auto [s, t] = key;
      if (!top) {
        // Phi: x^s y^t -> s x^{s-1} y^t + (m+1-s) x^s y^t
        if (s > 0) next.add_term(s - 1, t + ybump, c * s);
        next.add_term(s, t + ybump, c * (m + 1 - s));
      } else {
        // Psi: x^s y^t -> (s+t+1) x^s y^t + (m-s-t) x^{s+1} y^t
        next.add_term(s, t + ybump, c * (s + t + 1));
        next.add_term(s + 1, t + ybump, c * (m - s - t));
      }
    }
    p = std::move(next);
  }
  return p;
}

BivarPolynomial coefficient_recursion_bivar(int n, const IntegerSet& X, const IntegerSet& Y) {
  BivarPolynomial p = BivarPolynomial::monomial(0, 0);
  for (int m = 0; m < n; ++m) {
    const bool inX = X.contains(m + 1);
    const bool inY = Y.contains(m + 1);
    BivarPolynomial next;
    for (int s = 0; s <= m + 1; ++s) {
      for (int t = 0; t <= m + 1; ++t) {
        mpz_class v;
        if (!inX && !inY) {
          v = (s + 1) * p.coeff(s + 1, t - 1) + (m + 1 - s) * p.coeff(s, t - 1);
        } else if (!inX && inY) {
          v = (s + 1) * p.coeff(s + 1, t) + (m + 1 - s) * p.coeff(s, t);
        } else if (inX && !inY) {
          v = (s + t) * p.coeff(s, t - 1) + (m + 2 - s - t) * p.coeff(s - 1, t - 1);
        } else {
          v = (s + t + 1) * p.coeff(s, t) + (m + 1 - s - t) * p.coeff(s - 1, t);
        }
        next.add_term(s, t, v);
      }
    }
    p = std::move(next);
  }
  return p;
}

BivarPolynomial q_recursion(int n, const IntegerSet& X) {
  BivarPolynomial p = BivarPolynomial::monomial(0, 0);
  for (int m = 0; m < n; ++m) {
    BivarPolynomial next;
    for (const auto& [key, c] : p.terms()) {
      const auto [s, k] = key;
      if (!X.contains(m + 1)) {
        // Delta: x^s -> [s]_q x^{s-1} + q^s [m+1-s]_q x^s
        add_qint(next, s - 1, k, s, c);
        add_qint(next, s, k + s, m + 1 - s, c);
      } else {
        // Gamma: x^s -> [s+1]_q x^s + q^{s+1} [m-s]_q x^{s+1}
        add_qint(next, s, k, s + 1, c);
        add_qint(next, s + 1, k + s + 1, m - s, c);
      }
    }
    p = std::move(next);
  }
  return p;
}

IntegerSet q_complement_reverse(int n, const IntegerSet& X) {
  std::vector<int> out;
  for (int x : X.members(n)) out.push_back(n + 1 - x);
  return IntegerSet::of(std::move(out));
}

}  // namespace descpoly
