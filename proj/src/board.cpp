#include "descpoly/board.hpp"

#include <algorithm>
#include <stdexcept>

namespace descpoly {

Board::Board(int n, std::set<Cell> cells) : n_(n), cells_(std::move(cells)) {
  for (const auto& [i, j] : cells_) {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      throw std::invalid_argument("cell (" + std::to_string(i) + "," + std::to_string(j) + ") outside board");
    }
  }
}

void Board::add(int row, int col) {
  if (row < 1 || row > n_ || col < 1 || col > n_) throw std::invalid_argument("cell outside board");
  cells_.insert({row, col});
}

std::vector<std::uint64_t> Board::column_masks() const {
  if (n_ > 64) throw std::invalid_argument("column masks need n <= 64");
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& [i, j] : cells_) masks[j] |= std::uint64_t{1} << (i - 1);
  return masks;
}

std::vector<int> Board::column_heights() const {
  std::vector<int> h(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& c : cells_) ++h[c.second];
  return h;
}

std::vector<int> Board::row_lengths() const {
  std::vector<int> len(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& c : cells_) ++len[c.first];
  return len;
}

std::string Board::to_ascii() const {
  std::string out;
  for (int i = n_; i >= 1; --i) {
    for (int j = 1; j <= n_; ++j) out += contains(i, j) ? '#' : '.';
    out += '\n';
  }
  return out;
}

std::vector<int> FerrersShape::structure() const {
  std::vector<int> s(heights.size());
  for (std::size_t i = 0; i < heights.size(); ++i) s[i] = heights[i] - static_cast<int>(i);
  return s;
}

std::vector<int> FerrersShape::row_lengths() const {
  int top = heights.empty() ? 0 : *std::max_element(heights.begin(), heights.end());
  std::vector<int> rows;
  for (int r = 1; r <= top; ++r) {
    rows.push_back(static_cast<int>(std::count_if(heights.begin(), heights.end(), [r](int h) { return h >= r; })));
  }
  return rows;
}

}  // namespace descpoly
