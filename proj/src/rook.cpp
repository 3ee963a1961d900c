#include "descpoly/rook.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "descpoly/arith.hpp"
#include "descpoly/errors.hpp"

namespace descpoly {
namespace {

bool subset(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

std::vector<mpz_class> hits_histogram(const std::vector<std::uint64_t>& hist) {
  std::vector<mpz_class> out;
  for (std::uint64_t h : hist) {
    mpz_class c;
    mpz_import(c.get_mpz_t(), 1, 1, sizeof(h), 0, 0, &h);
    out.push_back(c);
  }
  return out;
}

}  // namespace

Board board_from_query(int n, const DescentQuery& q) {
  Board B(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      if (q.is_descent(i, j)) B.add(i, j);
    }
  }
  return B;
}

bool is_ferrers(const Board& B) {
  auto cols = B.column_masks();
  cols.erase(cols.begin());
  std::sort(cols.begin(), cols.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  for (std::size_t k = 1; k < cols.size(); ++k) {
    if (!subset(cols[k - 1], cols[k])) return false;
  }
  return true;
}

std::vector<mpz_class> rook_numbers(const Board& B) {
  const int n = B.n();
  std::vector<mpz_class> r(static_cast<std::size_t>(n) + 1, 0);
  r[0] = 1;
  if (is_ferrers(B)) {
    auto h = B.column_heights();
    h.erase(h.begin());
    std::sort(h.begin(), h.end());
    for (int height : h) {
      for (int k = n - 1; k >= 0; --k) {
        if (height - k > 0) r[k + 1] += r[k] * (height - k);
      }
    }
    return r;
  }
  if (n > kGeneralRookCap) {
    throw LimitExceeded("rook numbers of a non-Ferrers board need n <= " + std::to_string(kGeneralRookCap));
  }
  const auto cols = B.column_masks();
  std::vector<mpz_class> dp(std::size_t{1} << n, 0);
  dp[0] = 1;
  for (int j = 1; j <= n; ++j) {
    // descending masks so each column places at most one rook
    for (std::size_t mask = dp.size(); mask-- > 0;) {
      if (dp[mask] == 0) continue;
      std::uint64_t free = cols[j] & ~static_cast<std::uint64_t>(mask);
      while (free) {
        const std::uint64_t bit = free & -free;
        dp[mask | bit] += dp[mask];
        free ^= bit;
      }
    }
  }
  r[0] = 0;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) r[std::popcount(mask)] += dp[mask];
  return r;
}

std::vector<mpz_class> hit_numbers_enumerated(const Board& B, int cap) {
  const int n = B.n();
  if (n > cap) {
    throw LimitExceeded("hit-number enumeration over S_" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  const auto cols = B.column_masks();
  std::vector<int> omega(static_cast<std::size_t>(n));
  std::iota(omega.begin(), omega.end(), 0);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
  do {
    int on = 0;
    for (int j = 0; j < n; ++j) on += static_cast<int>(cols[j + 1] >> omega[j] & 1U);
    ++hist[on];
  } while (std::next_permutation(omega.begin(), omega.end()));
  return hits_histogram(hist);
}

std::vector<mpz_class> hit_numbers_from_rooks(const Board& B) {
  const int n = B.n();
  const auto r = rook_numbers(B);
  std::vector<mpz_class> h(static_cast<std::size_t>(n) + 1, 0);
  // expand r_k (n-k)! (z-1)^k
  for (int k = 0; k <= n; ++k) {
    if (r[k] == 0) continue;
    const mpz_class base = r[k] * factorial(n - k);
    for (int i = 0; i <= k; ++i) {
      mpz_class t = base * binom(k, i);
      if ((k - i) % 2) t = -t;
      h[i] += t;
    }
  }
  return h;
}

int u_excedences(const Permutation& omega, const DescentQuery& q) {
  int count = 0;
  for (int j = 1; j <= omega.size(); ++j) {
    if (q.is_descent(omega(j), j)) ++count;
  }
  return count;
}

Permutation foata(const Permutation& omega) {
  const int n = omega.size();
  const Permutation inv = omega.inverse();
  std::vector<char> done(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> out;
  // scanning from 1 to n, the first unseen element of a cycle is not its max;
  // collect cycles by their maximum instead
  std::vector<int> maxima;
  for (int i = 1; i <= n; ++i) {
    if (done[i]) continue;
    int mx = i;
    for (int z = i;;) {
      done[z] = 1;
      mx = std::max(mx, z);
      z = omega(z);
      if (z == i) break;
    }
    maxima.push_back(mx);
  }
  std::sort(maxima.begin(), maxima.end());
  for (int mx : maxima) {
    // the cycle written with mx last, then reversed: mx and its successive preimages
    int z = mx;
    do {
      out.push_back(z);
      z = inv(z);
    } while (z != mx);
  }
  return Permutation(std::move(out));
}

Permutation foata_inverse(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> omega(static_cast<std::size_t>(n), 0);
  int start = 1;
  while (start <= n) {
    int end = start;
    while (end < n && sigma(end + 1) < sigma(start)) ++end;
    // block b_1 .. b_k with b_1 its maximum: omega(b_{t+1}) = b_t, omega(b_1) = b_k
    for (int t = start; t < end; ++t) omega[static_cast<std::size_t>(sigma(t + 1) - 1)] = sigma(t);
    omega[static_cast<std::size_t>(sigma(start) - 1)] = sigma(end);
    start = end + 1;
  }
  return Permutation(std::move(omega));
}

FerrersShape height_structure(const Board& B) {
  if (!is_ferrers(B)) throw NotFerrers("board columns are not nested, so it is not a Ferrers board");
  auto h = B.column_heights();
  h.erase(h.begin());
  std::sort(h.begin(), h.end());
  return FerrersShape{std::move(h)};
}

Board ferrers_board(const FerrersShape& shape) {
  Board B(shape.n());
  for (int i = 1; i <= shape.n(); ++i) {
    for (int row = 1; row <= shape.heights[static_cast<std::size_t>(i - 1)]; ++row) B.add(row, i);
  }
  return B;
}

CanonicalBoard canonical_distinct_rows(const Board& B) {
  const FerrersShape shape = height_structure(B);
  auto s = shape.structure();
  if (std::any_of(s.begin(), s.end(), [](int v) { return v > 0; })) {
    throw NotFerrers("structure vector has a positive entry; board does not fit below the diagonal");
  }
  std::sort(s.begin(), s.end(), std::greater<>());
  FerrersShape canon;
  for (std::size_t i = 0; i < s.size(); ++i) canon.heights.push_back(s[i] + static_cast<int>(i));
  std::vector<int> xs;
  for (int len : canon.row_lengths()) {
    if (len > 0) xs.push_back(len + 1);
  }
  IntegerSet X = IntegerSet::of(std::move(xs));
  Board board = board_from_query(B.n(), DescentQuery{X, IntegerSet::all(), IntegerSet::all()});
  return CanonicalBoard{std::move(board), std::move(canon), std::move(X)};
}

bool rook_equivalent(const FerrersShape& a, const FerrersShape& b) {
  auto sa = a.structure();
  auto sb = b.structure();
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

IntPolynomial hits_via_foata(int n, const DescentQuery& q) {
  return IntPolynomial::from_coefficients(hit_numbers_from_rooks(board_from_query(n, q)));
}

IntPolynomial excedence_poly(int n, const DescentQuery& q, int cap) {
  if (n > cap) throw LimitExceeded("enumeration over S_" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<int> omega(static_cast<std::size_t>(n));
  std::iota(omega.begin(), omega.end(), 1);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
  do {
    int c = 0;
    for (int j = 1; j <= n; ++j) c += q.is_descent(omega[static_cast<std::size_t>(j - 1)], j);
    ++hist[static_cast<std::size_t>(c)];
  } while (std::next_permutation(omega.begin(), omega.end()));
  return IntPolynomial::from_coefficients(hits_histogram(hist));
}

}  // namespace descpoly
