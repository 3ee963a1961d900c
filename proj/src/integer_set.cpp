#include "descpoly/integer_set.hpp"

#include <algorithm>
#include <charconv>

#include "descpoly/errors.hpp"

namespace descpoly {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("invalid integer '" + std::string(s) + "' in set '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view whole) {
  std::vector<int> out;
  s = trim(s);
  if (s.empty()) return out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_int(s.substr(0, comma), whole));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

IntegerSet parse_atom(std::string_view atom, std::string_view whole) {
  atom = trim(atom);
  if (atom == "all") return IntegerSet::all();
  if (atom.size() >= 2 && atom.front() == '{' && atom.back() == '}') {
    return IntegerSet::of(parse_int_list(atom.substr(1, atom.size() - 2), whole));
  }
  if (atom.starts_with("mod:")) {
    auto rest = atom.substr(4);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected mod:k:r1,r2,... in '" + std::string(whole) + "'");
    }
    int k = parse_int(rest.substr(0, colon), whole);
    return IntegerSet::residues(k, parse_int_list(rest.substr(colon + 1), whole));
  }
  if (atom.starts_with("geq:")) {
    return IntegerSet::at_least(parse_int(atom.substr(4), whole));
  }
  throw ParseError("unrecognized set syntax '" + std::string(atom) + "'");
}

}  // namespace

IntegerSet::IntegerSet() : rep_(Explicit{}) {}

IntegerSet IntegerSet::all() { return IntegerSet(All{}); }

IntegerSet IntegerSet::of(std::vector<int> elements) {
  for (int e : elements) {
    if (e < 1) throw ParseError("set elements must be positive, got " + std::to_string(e));
  }
  sort_unique(elements);
  return IntegerSet(Explicit{std::move(elements)});
}

IntegerSet IntegerSet::residues(int modulus, std::vector<int> residues) {
  if (modulus < 1) throw ParseError("modulus must be >= 1");
  for (int& r : residues) {
    if (r < 0 || r >= modulus) {
      throw ParseError("residue " + std::to_string(r) + " outside [0," + std::to_string(modulus - 1) + "]");
    }
  }
  sort_unique(residues);
  return IntegerSet(Residues{modulus, std::move(residues)});
}

IntegerSet IntegerSet::at_least(int threshold) {
  if (threshold < 1) threshold = 1;
  return IntegerSet(HalfLine{threshold});
}

IntegerSet IntegerSet::union_of(std::vector<IntegerSet> parts) {
  std::vector<IntegerSet> flat;
  for (auto& p : parts) {
    if (auto* u = std::get_if<Union>(&p.rep_)) {
      for (auto& q : u->parts) flat.push_back(q);
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.size() == 1) return flat.front();
  return IntegerSet(Union{std::move(flat)});
}

IntegerSet IntegerSet::from_mask(unsigned long long mask) {
  std::vector<int> e;
  for (int i = 0; i < 64; ++i) {
    if (mask >> i & 1ULL) e.push_back(i + 1);
  }
  return IntegerSet(Explicit{std::move(e)});
}

IntegerSet IntegerSet::parse(std::string_view text) {
  std::vector<IntegerSet> parts;
  std::string_view rest = text;
  while (true) {
    auto bar = rest.find('|');
    parts.push_back(parse_atom(rest.substr(0, bar), text));
    if (bar == std::string_view::npos) break;
    rest.remove_prefix(bar + 1);
  }
  return union_of(std::move(parts));
}

std::string IntegerSet::to_string() const {
  return std::visit(overloaded{
                        [](const Explicit& e) { return "{" + join(e.elements) + "}"; },
                        [](const Residues& r) {
                          return "mod:" + std::to_string(r.modulus) + ":" + join(r.residues);
                        },
                        [](const HalfLine& h) { return "geq:" + std::to_string(h.threshold); },
                        [](const All&) { return std::string("all"); },
                        [](const Union& u) {
                          std::string out;
                          for (std::size_t i = 0; i < u.parts.size(); ++i) {
                            if (i) out += '|';
                            out += u.parts[i].to_string();
                          }
                          return out;
                        },
                    },
                    rep_);
}

bool IntegerSet::contains(long long z) const {
  if (z < 1) return false;
  return std::visit(overloaded{
                        [z](const Explicit& e) {
                          return std::binary_search(e.elements.begin(), e.elements.end(), z);
                        },
                        [z](const Residues& r) {
                          int res = static_cast<int>(z % r.modulus);
                          return std::binary_search(r.residues.begin(), r.residues.end(), res);
                        },
                        [z](const HalfLine& h) { return z >= h.threshold; },
                        [](const All&) { return true; },
                        [z](const Union& u) {
                          return std::any_of(u.parts.begin(), u.parts.end(),
                                             [z](const IntegerSet& p) { return p.contains(z); });
                        },
                    },
                    rep_);
}

std::vector<int> IntegerSet::members(int n) const {
  std::vector<int> out;
  for (int z = 1; z <= n; ++z) {
    if (contains(z)) out.push_back(z);
  }
  return out;
}

std::vector<int> IntegerSet::non_members(int n) const {
  std::vector<int> out;
  for (int z = 1; z <= n; ++z) {
    if (!contains(z)) out.push_back(z);
  }
  return out;
}

std::vector<char> IntegerSet::mask(int n) const {
  std::vector<char> m(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  for (int z = 1; z <= n; ++z) m[z] = contains(z) ? 1 : 0;
  return m;
}

int IntegerSet::count_upto(int n) const { return static_cast<int>(members(n).size()); }

IntegerSet IntegerSet::restrict(int n) const { return IntegerSet(Explicit{members(n)}); }

IntegerSet IntegerSet::complement_in(int n) const { return IntegerSet(Explicit{non_members(n)}); }

}  // namespace descpoly
