#pragma once

#include <span>
#include <string>
#include <vector>

namespace descpoly {

/// A composition rho = (rho_1, ..., rho_m) of n; all parts positive.
class CompositionSpec {
 public:
  CompositionSpec() = default;
  explicit CompositionSpec(std::vector<int> parts);

  /// Composition (1, 1, ..., 1) of n; its rearrangement class is S_n.
  static CompositionSpec ones(int n) { return CompositionSpec(std::vector<int>(static_cast<std::size_t>(n), 1)); }
  /// "2,3,1"
  static CompositionSpec parse(std::string_view text);

  int n() const { return n_; }
  int m() const { return static_cast<int>(parts_.size()); }
  /// 1-based: multiplicity of letter i.
  int part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> parts() const { return parts_; }
  /// The word 1^{rho_1} 2^{rho_2} ... m^{rho_m}, the lexicographically first rearrangement.
  std::vector<int> sorted_letters() const;
  std::string to_string() const;

  friend bool operator==(const CompositionSpec&, const CompositionSpec&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// A word in the rearrangement class R(rho).
class Word {
 public:
  /// Throws std::invalid_argument unless letter i occurs exactly rho_i times.
  Word(CompositionSpec parent, std::vector<int> letters);
  /// Infers rho from the letter counts; every letter 1..max must occur.
  static Word from_letters(std::vector<int> letters);

  const CompositionSpec& parent() const { return parent_; }
  std::span<const int> letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  CompositionSpec parent_;
  std::vector<int> letters_;
};

}  // namespace descpoly
