#pragma once

#include <gmpxx.h>

#include <vector>

#include "descpoly/board.hpp"
#include "descpoly/integer_set.hpp"
#include "descpoly/permutation.hpp"
#include "descpoly/polynomial.hpp"
#include "descpoly/stats.hpp"

namespace descpoly {

inline constexpr int kGeneralRookCap = 12;
inline constexpr int kHitEnumerationCap = 10;

/// Cells (i, j) with j < i <= n, i in X, j in Y, i - j in Z.
Board board_from_query(int n, const DescentQuery& q);

/// True when the row sets of the columns are totally ordered by inclusion.
bool is_ferrers(const Board& B);

/// r_0 .. r_n. Ferrers boards use a column sweep; other boards a row-subset
/// dynamic program limited to n <= 12 (LimitExceeded above that).
std::vector<mpz_class> rook_numbers(const Board& B);

/// Hit numbers from all n! full placements. LimitExceeded when n > cap.
std::vector<mpz_class> hit_numbers_enumerated(const Board& B, int cap = kHitEnumerationCap);

/// Hit numbers from sum_k h_k z^k = sum_k r_k (n-k)! (z-1)^k.
std::vector<mpz_class> hit_numbers_from_rooks(const Board& B);

/// Number of j with omega_j = i > j and (i, j) a cell of B^U.
int u_excedences(const Permutation& omega, const DescentQuery& q);

/// Foata's first transformation: cycles with their largest element first,
/// ordered by increasing largest element, concatenated.
Permutation foata(const Permutation& omega);
/// Cuts before each left-to-right maximum and reads the blocks back as cycles.
Permutation foata_inverse(const Permutation& sigma);

/// Column heights sorted into weakly increasing order (padded with zeros to n).
/// Throws NotFerrers unless is_ferrers(B).
FerrersShape height_structure(const Board& B);

/// Cells of the right-justified drawing of a shape: column i holds rows 1..h_i.
Board ferrers_board(const FerrersShape& shape);

struct CanonicalBoard {
  Board board;        // the descent board of X' (Y = N)
  FerrersShape shape;
  IntegerSet X;       // X'
};

/// The rook-equivalent Ferrers board with distinct nonzero row lengths, and the
/// set X' whose descent board it is (a row of length L stands for L+1 in X').
/// Throws NotFerrers if B is not Ferrers or some s_i > 0.
CanonicalBoard canonical_distinct_rows(const Board& B);

/// Equal multisets of structure-vector entries.
bool rook_equivalent(const FerrersShape& a, const FerrersShape& b);

/// sum_s h_s(B_n^U) x^s with hit numbers from the rook polynomial of B_n^U.
IntPolynomial hits_via_foata(int n, const DescentQuery& q);

/// sum over omega in S_n of x^{u_excedences(omega)}, enumerated. LimitExceeded when n > cap.
IntPolynomial excedence_poly(int n, const DescentQuery& q, int cap = kHitEnumerationCap);

}  // namespace descpoly
