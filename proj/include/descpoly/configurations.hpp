#pragma once

#include <gmpxx.h>

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "descpoly/integer_set.hpp"
#include "descpoly/word.hpp"

namespace descpoly {

inline constexpr int kConfigPermCap = 7;
inline constexpr int kConfigWordCap = 8;

enum class Flavor { Standard, Overline, WordStandard, WordOverline };

const char* flavor_name(Flavor f);
Flavor parse_flavor(std::string_view name);

/// Everything that fixes a family of signed configurations except r.
/// Permutation flavors use rho = (1, ..., 1).
class ConfigContext {
 public:
  static ConfigContext permutations(Flavor flavor, int n, int s, IntegerSet X, IntegerSet Y);
  static ConfigContext words(Flavor flavor, CompositionSpec rho, int s, IntegerSet X, IntegerSet Y);

  Flavor flavor() const { return flavor_; }
  bool overline() const { return flavor_ == Flavor::Overline || flavor_ == Flavor::WordOverline; }
  const CompositionSpec& rho() const { return rho_; }
  int n() const { return rho_.n(); }
  int m() const { return rho_.m(); }
  int s() const { return s_; }
  const IntegerSet& X() const { return X_; }
  const IntegerSet& Y() const { return Y_; }
  /// a = total multiplicity of letters outside X.
  int a() const { return a_; }
  /// Number of signs every configuration carries: s, or (n - a) - s for overline flavors.
  int sign_total() const { return overline() ? n() - a_ - s_ : s_; }

  bool in_X(int letter) const { return letter >= 1 && letter <= m() && x_mask_[letter]; }
  bool is_descent(int top, int bottom) const {
    return top > bottom && in_X(top) && bottom >= 1 && bottom <= m() && y_mask_[bottom];
  }

 private:
  ConfigContext(Flavor flavor, CompositionSpec rho, int s, IntegerSet X, IntegerSet Y);

  Flavor flavor_;
  CompositionSpec rho_;
  int s_;
  IntegerSet X_, Y_;
  int a_ = 0;
  std::vector<char> x_mask_, y_mask_;
};

struct Token {
  enum Kind : char { Number, Plus, Minus };
  Kind kind;
  int value = 0;  // only meaningful for Number

  friend bool operator==(const Token&, const Token&) = default;
};

/// An array of letters interleaved with + and - signs.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<Token> items) : items_(std::move(items)) {}

  /// "5+2-+46+13-"; with commas when multi-digit letters occur ("11,3+2-").
  static Configuration parse(std::string_view text);
  std::string to_string() const;

  const std::vector<Token>& items() const { return items_; }
  std::vector<int> letters() const;
  int plus_count() const;
  int minus_count() const;
  /// (-1)^{number of minus signs}
  int weight() const { return minus_count() % 2 == 0 ? 1 : -1; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) { return a.to_string() <=> b.to_string(); }

 private:
  friend Configuration involution(const Configuration& c, const ConfigContext& ctx);
  std::vector<Token> items_;
};

/// Checks the letter multiset, the sign total and conditions (i)-(iii) of the flavor.
bool satisfies_conditions(const Configuration& c, const ConfigContext& ctx);

/// Flips the first sign (left to right) whose flip keeps satisfies_conditions true.
/// Throws MalformedConfiguration if c does not satisfy the conditions.
Configuration involution(const Configuration& c, const ConfigContext& ctx);

/// All configurations with r plus signs, in lexicographic order of the underlying word.
/// Throws LimitExceeded above n = 7 (permutations) or n = 8 (words).
std::vector<Configuration> enumerate_configs(const ConfigContext& ctx, int r);
void for_each_config(const ConfigContext& ctx, int r, const std::function<void(const Configuration&)>& visit);

/// The number of configurations predicted by the staged construction.
mpz_class staged_count(const ConfigContext& ctx, int r);

/// The fixed point of the involution attached to a permutation or word.
Configuration fixed_point_from_sequence(std::span<const int> letters, const ConfigContext& ctx);

}  // namespace descpoly
