#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace descpoly {

/// A set of cells inside the n x n grid. Cell (i, j) is row i, column j and
/// stands for "value i at position j", so a full rook placement is a
/// permutation omega with omega_j = i.
class Board {
 public:
  using Cell = std::pair<int, int>;

  Board() = default;
  explicit Board(int n) : n_(n) {}
  /// Throws std::invalid_argument if a cell lies outside [n] x [n].
  Board(int n, std::set<Cell> cells);

  int n() const { return n_; }
  const std::set<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(int row, int col) const { return cells_.count({row, col}) != 0; }
  void add(int row, int col);

  /// Entry j (1-based, entry 0 unused) has bit (i-1) set iff (i, j) is a cell. Needs n <= 64.
  std::vector<std::uint64_t> column_masks() const;
  /// Number of cells in each column, entry 0 unused.
  std::vector<int> column_heights() const;
  std::vector<int> row_lengths() const;

  /// Rows printed top to bottom as values n..1; '#' for a cell, '.' otherwise.
  std::string to_ascii() const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  int n_ = 0;
  std::set<Cell> cells_;
};

/// Right-justified Ferrers shape described by weakly increasing column heights.
struct FerrersShape {
  std::vector<int> heights;  // h_1 <= h_2 <= ... <= h_n

  int n() const { return static_cast<int>(heights.size()); }
  /// s_i = h_i - (i - 1)
  std::vector<int> structure() const;
  /// Row r (1-based) has #{i : h_i >= r} cells.
  std::vector<int> row_lengths() const;

  friend bool operator==(const FerrersShape&, const FerrersShape&) = default;
};

}  // namespace descpoly
