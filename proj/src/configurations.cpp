#include "descpoly/configurations.hpp"

#include <algorithm>
#include <cctype>

#include "descpoly/arith.hpp"
#include "descpoly/errors.hpp"

namespace descpoly {

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Standard: return "standard";
    case Flavor::Overline: return "overline";
    case Flavor::WordStandard: return "word-standard";
    case Flavor::WordOverline: return "word-overline";
  }
  return "?";
}

Flavor parse_flavor(std::string_view name) {
  for (Flavor f : {Flavor::Standard, Flavor::Overline, Flavor::WordStandard, Flavor::WordOverline}) {
    if (name == flavor_name(f)) return f;
  }
  throw ParseError("unknown flavor '" + std::string(name) + "'");
}

ConfigContext::ConfigContext(Flavor flavor, CompositionSpec rho, int s, IntegerSet X, IntegerSet Y)
    : flavor_(flavor), rho_(std::move(rho)), s_(s), X_(std::move(X)), Y_(std::move(Y)) {
  x_mask_ = X_.mask(rho_.m());
  y_mask_ = Y_.mask(rho_.m());
  for (int v = 1; v <= rho_.m(); ++v) {
    if (!x_mask_[v]) a_ += rho_.part(v);
  }
}

ConfigContext ConfigContext::permutations(Flavor flavor, int n, int s, IntegerSet X, IntegerSet Y) {
  if (flavor == Flavor::WordStandard) flavor = Flavor::Standard;
  if (flavor == Flavor::WordOverline) flavor = Flavor::Overline;
  return ConfigContext(flavor, CompositionSpec::ones(n), s, std::move(X), std::move(Y));
}

ConfigContext ConfigContext::words(Flavor flavor, CompositionSpec rho, int s, IntegerSet X, IntegerSet Y) {
  if (flavor == Flavor::Standard) flavor = Flavor::WordStandard;
  if (flavor == Flavor::Overline) flavor = Flavor::WordOverline;
  return ConfigContext(flavor, std::move(rho), s, std::move(X), std::move(Y));
}

Configuration Configuration::parse(std::string_view text) {
  std::vector<Token> items;
  const bool commas = text.find(',') != std::string_view::npos;
  bool after_comma = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '+' || c == '-') {
      if (after_comma) throw ParseError("sign after comma in '" + std::string(text) + "'");
      items.push_back({c == '+' ? Token::Plus : Token::Minus, 0});
    } else if (c == ',') {
      if (items.empty() || items.back().kind != Token::Number || after_comma) {
        throw ParseError("comma must separate two numbers in '" + std::string(text) + "'");
      }
      after_comma = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!commas) {
        items.push_back({Token::Number, c - '0'});
        continue;
      }
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      --i;
      items.push_back({Token::Number, v});
      after_comma = false;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in configuration");
    }
  }
  if (after_comma) throw ParseError("trailing comma in configuration");
  return Configuration(std::move(items));
}

std::string Configuration::to_string() const {
  int top = 0;
  for (const auto& t : items_) {
    if (t.kind == Token::Number) top = std::max(top, t.value);
  }
  std::string out;
  bool prev_number = false;
  for (const auto& t : items_) {
    switch (t.kind) {
      case Token::Number:
        if (prev_number && top > 9) out += ',';
        out += std::to_string(t.value);
        break;
      case Token::Plus: out += '+'; break;
      case Token::Minus: out += '-'; break;
    }
    prev_number = t.kind == Token::Number;
  }
  return out;
}

std::vector<int> Configuration::letters() const {
  std::vector<int> out;
  for (const auto& t : items_) {
    if (t.kind == Token::Number) out.push_back(t.value);
  }
  return out;
}

int Configuration::plus_count() const {
  return static_cast<int>(std::count_if(items_.begin(), items_.end(), [](const Token& t) { return t.kind == Token::Plus; }));
}

int Configuration::minus_count() const {
  return static_cast<int>(std::count_if(items_.begin(), items_.end(), [](const Token& t) { return t.kind == Token::Minus; }));
}

bool satisfies_conditions(const Configuration& c, const ConfigContext& ctx) {
  const auto& items = c.items();
  const int m = ctx.m();
  std::vector<int> seen(static_cast<std::size_t>(m) + 1, 0);
  int signs = 0;
  int prev = 0;        // previous letter, 0 before the first
  int plus_since = 0;  // plus signs since prev
  for (std::size_t k = 0; k < items.size(); ++k) {
    const Token& t = items[k];
    if (t.kind == Token::Minus) {
      // (i) at the very beginning or right after a number
      if (k > 0 && items[k - 1].kind != Token::Number) return false;
      ++signs;
      continue;
    }
    if (t.kind == Token::Plus) {
      ++plus_since;
      ++signs;
      continue;
    }
    if (t.value < 1 || t.value > m) return false;
    ++seen[t.value];
    if (prev != 0) {
      const bool descent = ctx.is_descent(prev, t.value);
      const bool needs_plus = ctx.overline() ? (ctx.in_X(prev) && !descent) : descent;
      if (needs_plus && plus_since == 0) return false;
    }
    prev = t.value;
    plus_since = 0;
  }
  // (iii) for overline flavors: a final letter in X needs a + after it
  if (ctx.overline() && prev != 0 && ctx.in_X(prev) && plus_since == 0) return false;
  for (int v = 1; v <= m; ++v) {
    if (seen[v] != ctx.rho().part(v)) return false;
  }
  return signs == ctx.sign_total();
}

Configuration involution(const Configuration& c, const ConfigContext& ctx) {
  if (!satisfies_conditions(c, ctx)) {
    throw MalformedConfiguration("configuration " + c.to_string() + " violates the " + flavor_name(ctx.flavor()) +
                                 " conditions");
  }
  Configuration out = c;
  for (auto& t : out.items_) {
    if (t.kind == Token::Number) continue;
    const auto original = t.kind;
    t.kind = original == Token::Plus ? Token::Minus : Token::Plus;
    if (satisfies_conditions(out, ctx)) return out;
    t.kind = original;
  }
  return out;
}

namespace {

struct Generator {
  const ConfigContext& ctx;
  const std::function<void(const Configuration&)>& visit;
  std::vector<int> word;
  std::vector<char> required;  // gap g needs at least one plus
  std::vector<char> minus;     // gap g opens with a minus
  std::vector<int> plus;       // plus signs in gap g

  // gap g sits before letter g+1 (0-based letters); gap n is the tail
  void set_requirements() {
    const int n = static_cast<int>(word.size());
    required.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int g = 1; g <= n; ++g) {
      const int left = word[static_cast<std::size_t>(g - 1)];
      if (g == n) {
        required[g] = ctx.overline() && ctx.in_X(left);
        continue;
      }
      const bool descent = ctx.is_descent(left, word[static_cast<std::size_t>(g)]);
      required[g] = ctx.overline() ? (ctx.in_X(left) && !descent) : descent;
    }
  }

  void emit() {
    std::vector<Token> items;
    const int n = static_cast<int>(word.size());
    for (int g = 0; g <= n; ++g) {
      if (minus[g]) items.push_back({Token::Minus, 0});
      items.insert(items.end(), static_cast<std::size_t>(plus[g]), Token{Token::Plus, 0});
      if (g < n) items.push_back({Token::Number, word[static_cast<std::size_t>(g)]});
    }
    Configuration c(std::move(items));
    if (satisfies_conditions(c, ctx)) visit(c);
  }

  void place_plus(int g, int remaining) {
    const int gaps = static_cast<int>(plus.size());
    if (g == gaps) {
      if (remaining == 0) emit();
      return;
    }
    for (int p = 0; p <= remaining; ++p) {
      if (required[g] && p == 0) continue;
      plus[g] = p;
      place_plus(g + 1, remaining - p);
    }
    plus[g] = 0;
  }

  void place_minus(int g, int remaining, int r) {
    const int gaps = static_cast<int>(minus.size());
    if (remaining > gaps - g) return;
    if (g == gaps) {
      place_plus(0, r);
      return;
    }
    if (remaining > 0) {
      minus[g] = 1;
      place_minus(g + 1, remaining - 1, r);
      minus[g] = 0;
    }
    place_minus(g + 1, remaining, r);
  }
};

}  // namespace

void for_each_config(const ConfigContext& ctx, int r, const std::function<void(const Configuration&)>& visit) {
  const bool words = ctx.flavor() == Flavor::WordStandard || ctx.flavor() == Flavor::WordOverline;
  const int cap = words ? kConfigWordCap : kConfigPermCap;
  if (ctx.n() > cap) {
    throw LimitExceeded("configuration enumeration capped at n <= " + std::to_string(cap));
  }
  const int minus_total = ctx.sign_total() - r;
  if (r < 0 || minus_total < 0 || minus_total > ctx.n() + 1) return;
  Generator gen{ctx, visit, ctx.rho().sorted_letters(), {}, {}, {}};
  gen.minus.assign(static_cast<std::size_t>(ctx.n()) + 1, 0);
  gen.plus.assign(static_cast<std::size_t>(ctx.n()) + 1, 0);
  do {
    gen.set_requirements();
    gen.place_minus(0, minus_total, r);
  } while (std::next_permutation(gen.word.begin(), gen.word.end()));
}

std::vector<Configuration> enumerate_configs(const ConfigContext& ctx, int r) {
  std::vector<Configuration> out;
  for_each_config(ctx, r, [&out](const Configuration& c) { out.push_back(c); });
  return out;
}

mpz_class staged_count(const ConfigContext& ctx, int r) {
  const auto& rho = ctx.rho();
  const int n = ctx.n();
  const int a = ctx.a();
  const int minus_total = ctx.sign_total() - r;
  if (r < 0 || minus_total < 0) return 0;
  std::vector<int> outside;
  for (int v = 1; v <= rho.m(); ++v) {
    if (!ctx.in_X(v)) outside.push_back(rho.part(v));
  }
  mpz_class count = multinomial(outside) * binom(a + r, r) * binom(n + 1, minus_total);
  for (int x = 1; x <= rho.m(); ++x) {
    if (!ctx.in_X(x)) continue;
    const int k = rho.part(x);
    if (ctx.overline()) {
      count *= binom(r + word_beta(ctx.X(), rho, x) - word_beta(ctx.Y(), rho, x), k);
    } else {
      count *= binom(k + r + word_alpha(ctx.X(), rho, x) + word_beta(ctx.Y(), rho, x), k);
    }
  }
  return count;
}

Configuration fixed_point_from_sequence(std::span<const int> letters, const ConfigContext& ctx) {
  std::vector<Token> items;
  const std::size_t n = letters.size();
  for (std::size_t i = 0; i < n; ++i) {
    items.push_back({Token::Number, letters[i]});
    const bool last = i + 1 == n;
    const bool descent = !last && ctx.is_descent(letters[i], letters[i + 1]);
    const bool plus = ctx.overline() ? (ctx.in_X(letters[i]) && !descent) : descent;
    if (plus) items.push_back({Token::Plus, 0});
  }
  return Configuration(std::move(items));
}

}  // namespace descpoly
