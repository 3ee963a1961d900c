#include <doctest.h>

#include <random>

#include "descpoly/arith.hpp"
#include "descpoly/closed_forms.hpp"
#include "descpoly/errors.hpp"
#include "descpoly/rook.hpp"
#include "descpoly/stats.hpp"
#include "support.hpp"

using namespace descpoly;

namespace {

// Oracle: place rooks cell by cell, recursing over the remaining cells.
void place(const std::vector<Board::Cell>& cells, std::size_t from, std::uint64_t rows, std::uint64_t cols, int k,
           std::vector<mpz_class>& r) {
  ++r[static_cast<std::size_t>(k)];
  for (std::size_t i = from; i < cells.size(); ++i) {
    const auto [row, col] = cells[i];
    if ((rows >> row & 1U) || (cols >> col & 1U)) continue;
    place(cells, i + 1, rows | 1ULL << row, cols | 1ULL << col, k + 1, r);
  }
}

std::vector<mpz_class> naive_rooks(const Board& B) {
  std::vector<mpz_class> r(static_cast<std::size_t>(B.n()) + 1, 0);
  const std::vector<Board::Cell> cells(B.cells().begin(), B.cells().end());
  place(cells, 0, 0, 0, 0, r);
  return r;
}

Board block(int n, int row0, int col0, int k) {
  Board B(n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) B.add(row0 + i, col0 + j);
  }
  return B;
}

const DescentQuery kExample61{S("mod:6:4,5,0"), S("mod:6:1,2,3"), S("{1,2,3,4,5,6}")};

}  // namespace

TEST_CASE("boards from queries") {
  const auto B = board_from_query(8, DescentQuery{S("mod:2:0"), S("mod:2:1"), S("{1,3}")});
  CHECK(B.cells() == std::set<Board::Cell>{{2, 1}, {4, 1}, {4, 3}, {6, 3}, {6, 5}, {8, 5}, {8, 7}});
  CHECK(board_from_query(3, DescentQuery{S("{}"), S("all")}).empty());
  // two 3x3 blocks: rows 4..6 over columns 1..3 and rows 10..12 over columns 7..9
  auto blocks = block(12, 4, 1, 3);
  const auto second = block(12, 10, 7, 3);
  for (const auto& [i, j] : second.cells()) blocks.add(i, j);
  CHECK(board_from_query(12, kExample61) == blocks);
}

TEST_CASE("rook numbers") {
  CHECK(rook_numbers(Board(4)) == Z({1, 0, 0, 0, 0}));
  for (int k = 1; k <= 4; ++k) {
    const auto r = rook_numbers(block(6, 3, 1, k));
    for (int j = 0; j <= 6; ++j) CHECK(r[static_cast<std::size_t>(j)] == binom(k, j) * binom(k, j) * factorial(j));
  }
  const auto even = board_from_query(8, DescentQuery{IntegerSet::evens(), S("all")});
  CHECK(is_ferrers(even));
  CHECK(rook_numbers(even) == naive_rooks(even));
}

TEST_CASE("rook numbers of random boards agree with placement counting") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Board B(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (rng() % 3 == 0) B.add(i, j);
      }
    }
    CHECK(rook_numbers(B) == naive_rooks(B));
    CHECK(hit_numbers_from_rooks(B) == hit_numbers_enumerated(B));
  }
  Board zigzag(13);
  zigzag.add(2, 1);
  zigzag.add(3, 2);
  CHECK_THROWS_AS(rook_numbers(zigzag), LimitExceeded);
}

TEST_CASE("hit numbers") {
  CHECK(hit_numbers_enumerated(Board(3)) == Z({6, 0, 0, 0}));
  CHECK(hit_numbers_from_rooks(Board(3)) == Z({6, 0, 0, 0}));
  for (int n = 1; n <= 4; ++n) {
    const auto B = board_from_query(2 * n, DescentQuery{IntegerSet::evens(), S("all")});
    const auto h = hit_numbers_from_rooks(B);
    for (int s = 0; s <= n; ++s) CHECK(h[static_cast<std::size_t>(s)] == even_tops_product(n, s));
  }
  const DescentQuery q{S("{2,3,5,7,8}"), S("{1,2,4,5,6}")};
  const auto B = board_from_query(8, q);
  CHECK(IntPolynomial::from_coefficients(hit_numbers_enumerated(B)) == brute_poly(8, q));
  CHECK(IntPolynomial::from_coefficients(hit_numbers_from_rooks(B)) == brute_poly(8, q));
  CHECK_THROWS_AS(hit_numbers_enumerated(Board(11)), LimitExceeded);
}

TEST_CASE("Foata's transformation") {
  CHECK(foata(Permutation::parse("61437258")).to_string() == "43612758");
  CHECK(foata(Permutation::parse("41576238")).to_string() == "74126538");
  CHECK(foata(Permutation::identity(6)) == Permutation::identity(6));
  CHECK(foata_inverse(Permutation::parse("43612758")).to_string() == "61437258");
  CHECK(foata_inverse(Permutation::identity(6)) == Permutation::identity(6));
}

TEST_CASE("Foata round trips") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    do {
      const Permutation w(v);
      CHECK(foata_inverse(foata(w)) == w);
      CHECK(foata(foata_inverse(w)) == w);
    } while (std::next_permutation(v.begin(), v.end()));
  }
  std::mt19937_64 rng(42);
  std::vector<int> v{1, 2, 3, 4, 5, 6, 7, 8};
  for (int trial = 0; trial < 200; ++trial) {
    std::shuffle(v.begin(), v.end(), rng);
    const Permutation w(v);
    CHECK(foata(foata_inverse(w)) == w);
  }
}

TEST_CASE("descent pairs of Phi(omega) are the excedence pairs of omega") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const DescentQuery q{IntegerSet::from_mask(rng() & 0x7f), IntegerSet::from_mask(rng() & 0x7f),
                         IntegerSet::from_mask(rng() & 0x3f)};
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    do {
      const Permutation w(v);
      CHECK(des_count(foata(w).values(), q) == u_excedences(w, q));
    } while (std::next_permutation(v.begin(), v.end()));
    CHECK(hits_via_foata(n, q) == brute_poly(n, q));
    CHECK(excedence_poly(n, q) == brute_poly(n, q));
  }
  // omega = 41576238 has exactly the U-excedences 4 > 1 and 6 > 5
  const DescentQuery u{S("mod:2:0"), S("mod:2:1"), S("{1,3}")};
  CHECK(u_excedences(Permutation::parse("41576238"), u) == 2);
}

TEST_CASE("hits via Foata") {
  const auto p = hits_via_foata(8, DescentQuery{IntegerSet::evens(), S("all")});
  for (int s = 0; s <= 4; ++s) CHECK(p.coeff(s) == even_tops_product(4, s));
  CHECK(coeffs(hits_via_foata(4, DescentQuery{S("{}"), S("all")})) == Z({24}));
}

TEST_CASE("height and structure vectors") {
  const auto even = board_from_query(8, DescentQuery{IntegerSet::evens(), S("all")});
  CHECK(height_structure(even).structure() == std::vector<int>{0, 0, -1, -1, -2, -2, -3, -3});
  Board rect(8);
  for (int i = 7; i <= 8; ++i) {
    for (int j = 1; j <= 3; ++j) rect.add(i, j);
  }
  CHECK(height_structure(rect).structure() == std::vector<int>{0, -1, -2, -3, -4, -3, -4, -5});
  CHECK(height_structure(Board(5)).structure() == std::vector<int>{0, -1, -2, -3, -4});
  Board zigzag(3);
  zigzag.add(2, 1);
  zigzag.add(3, 2);
  CHECK_FALSE(is_ferrers(zigzag));
  CHECK_THROWS_AS(height_structure(zigzag), NotFerrers);
}

TEST_CASE("canonical distinct-rows boards") {
  const DescentQuery q{S("{2,3,5,7,8}"), S("{1,2,4,5,6}")};
  const auto canon = canonical_distinct_rows(board_from_query(8, q));
  CHECK(canon.X.to_string() == "{2,3,4,5,7}");

  Board rect(8);
  for (int i = 7; i <= 8; ++i) {
    for (int j = 1; j <= 3; ++j) rect.add(i, j);
  }
  CHECK(canonical_distinct_rows(rect).X.to_string() == "{3,5}");

  const auto even = board_from_query(8, DescentQuery{IntegerSet::evens(), S("all")});
  const auto even_canon = canonical_distinct_rows(even);
  CHECK(even_canon.X.to_string() == "{2,4,6,8}");
  CHECK(even_canon.shape.heights == std::vector<int>{0, 1, 1, 2, 2, 3, 3, 4});
  const FerrersShape square{{0, 0, 0, 0, 4, 4, 4, 4}};
  CHECK(rook_equivalent(height_structure(even), square));
  CHECK(hit_numbers_from_rooks(ferrers_board(square)) == hit_numbers_from_rooks(even));
}

TEST_CASE("rook equivalence") {
  const auto B = height_structure(board_from_query(6, DescentQuery{S("{2,4,5}"), S("{1,3}")}));
  CHECK(rook_equivalent(B, B));
  CHECK_FALSE(rook_equivalent(FerrersShape{{0, 0, 1}}, FerrersShape{{0, 1, 1}}));
  // equal structure multisets give equal hit numbers
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto b1 = height_structure(board_from_query(n, DescentQuery{IntegerSet::from_mask(rng()), IntegerSet::from_mask(rng())}));
    const auto b2 = height_structure(board_from_query(n, DescentQuery{IntegerSet::from_mask(rng()), IntegerSet::from_mask(rng())}));
    if (rook_equivalent(b1, b2)) {
      CHECK(hit_numbers_from_rooks(ferrers_board(b1)) == hit_numbers_from_rooks(ferrers_board(b2)));
    }
  }
}

TEST_CASE("P^{X,Y} = P^{X'} for all pairs in [5]") {
  const int n = 5;
  for (unsigned xm = 0; xm < 32; ++xm) {
    for (unsigned ym = 0; ym < 32; ++ym) {
      const DescentQuery q{IntegerSet::from_mask(xm), IntegerSet::from_mask(ym)};
      const auto B = board_from_query(n, q);
      const auto canon = canonical_distinct_rows(B);
      CHECK(brute_poly(n, DescentQuery{canon.X, S("all")}) == brute_poly(n, q));
      CHECK(rook_equivalent(height_structure(B), canon.shape));
      auto rows = canon.shape.row_lengths();
      std::erase(rows, 0);
      CHECK(std::set<int>(rows.begin(), rows.end()).size() == rows.size());
    }
  }
}

TEST_CASE("the n = 12 board of two 3x3 blocks") {
  const auto B = board_from_query(12, kExample61);
  const auto h = hit_numbers_from_rooks(B);
  CHECK(h == Z({79496640, 170760960, 152798400, 62622720, 12363840, 933120, 25920, 0, 0, 0, 0, 0, 0}));
  // Independent count: p rooks on the first block, q on the second, and the other
  // 12 - p - q rooks kept off both blocks by inclusion-exclusion over i and j.
  for (int s = 0; s <= 6; ++s) {
    mpz_class total = 0;
    for (int p = 0; p <= 3; ++p) {
      const int q = s - p;
      if (q < 0 || q > 3) continue;
      const mpz_class on = binom(3, p) * binom(3, p) * factorial(p) * binom(3, q) * binom(3, q) * factorial(q);
      mpz_class off = 0;
      for (int i = 0; i <= 3 - p; ++i) {
        for (int j = 0; j <= 3 - q; ++j) {
          mpz_class t = binom(3 - p, i) * binom(3 - p, i) * factorial(i) * binom(3 - q, j) * binom(3 - q, j) *
                        factorial(j) * factorial(12 - s - i - j);
          off += (i + j) % 2 ? mpz_class(-t) : t;
        }
      }
      total += on * off;
    }
    CHECK(total == h[static_cast<std::size_t>(s)]);
  }
}
