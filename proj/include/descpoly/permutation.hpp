#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace descpoly {

/// A permutation of [n] in one-line notation sigma_1 ... sigma_n.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless values is a bijection on [n].
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  /// Accepts "54213" (one digit per letter) or "11,3,2,...".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  /// 1-based access: value at position i.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> values() const { return values_; }

  Permutation inverse() const;
  /// (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  /// sigma^c_i = n + 1 - sigma_i
  Permutation complement() const;
  /// sigma^r_i = sigma_{n+1-i}
  Permutation reverse() const;

  /// Digits run together when n <= 9, comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Formats any letter sequence the same way Permutation::to_string does.
std::string sequence_to_string(std::span<const int> letters);

/// Parses a letter sequence: one digit per letter unless commas are present.
std::vector<int> parse_sequence(std::string_view text);

}  // namespace descpoly
