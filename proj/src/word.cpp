#include "descpoly/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "descpoly/permutation.hpp"

namespace descpoly {

CompositionSpec::CompositionSpec(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    n_ += p;
  }
}

CompositionSpec CompositionSpec::parse(std::string_view text) {
  if (text.find(',') == std::string_view::npos) {
    // a single part, possibly multi-digit
    return CompositionSpec(std::vector<int>{std::stoi(std::string(text))});
  }
  return CompositionSpec(parse_sequence(text));
}

std::vector<int> CompositionSpec::sorted_letters() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int i = 1; i <= m(); ++i) out.insert(out.end(), static_cast<std::size_t>(part(i)), i);
  return out;
}

std::string CompositionSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Word::Word(CompositionSpec parent, std::vector<int> letters)
    : parent_(std::move(parent)), letters_(std::move(letters)) {
  std::vector<int> counts(static_cast<std::size_t>(parent_.m()) + 1, 0);
  if (size() != parent_.n()) throw std::invalid_argument("word length does not match composition");
  for (int l : letters_) {
    if (l < 1 || l > parent_.m()) throw std::invalid_argument("letter outside alphabet [m]");
    ++counts[l];
  }
  for (int i = 1; i <= parent_.m(); ++i) {
    if (counts[i] != parent_.part(i)) {
      throw std::invalid_argument("word is not in the rearrangement class of " + parent_.to_string());
    }
  }
}

Word Word::from_letters(std::vector<int> letters) {
  if (letters.empty()) throw std::invalid_argument("empty word");
  int m = *std::max_element(letters.begin(), letters.end());
  std::vector<int> counts(static_cast<std::size_t>(std::max(m, 0)), 0);
  for (int l : letters) {
    if (l < 1) throw std::invalid_argument("letters must be positive");
    ++counts[static_cast<std::size_t>(l - 1)];
  }
  return Word(CompositionSpec(std::move(counts)), std::move(letters));
}

std::string Word::to_string() const { return sequence_to_string(letters_); }

}  // namespace descpoly
