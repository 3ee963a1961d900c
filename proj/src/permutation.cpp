#include "descpoly/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "descpoly/errors.hpp"

namespace descpoly {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_sequence(text)); }

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> out(values_.size());
  for (int i = 1; i <= size(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(out));
}

Permutation Permutation::complement() const {
  std::vector<int> out(values_);
  for (int& v : out) v = size() + 1 - v;
  return Permutation(std::move(out));
}

Permutation Permutation::reverse() const {
  return Permutation(std::vector<int>(values_.rbegin(), values_.rend()));
}

std::string Permutation::to_string() const { return sequence_to_string(values_); }

std::string sequence_to_string(std::span<const int> letters) {
  const bool wide = std::any_of(letters.begin(), letters.end(), [](int v) { return v > 9; });
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (wide && i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

std::vector<int> parse_sequence(std::string_view text) {
  std::vector<int> out;
  if (text.find(',') != std::string_view::npos) {
    while (true) {
      auto comma = text.find(',');
      auto tok = text.substr(0, comma);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("invalid letter '" + std::string(tok) + "'");
      }
      out.push_back(v);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return out;
  }
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError(std::string("invalid letter '") + c + "'");
    out.push_back(c - '0');
  }
  return out;
}

}  // namespace descpoly
