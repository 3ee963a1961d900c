#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace descpoly {

/// A subset of the positive integers {1, 2, 3, ...}.
///
/// Sets may be infinite (residue classes, half-lines, everything); every
/// computation in the library only looks at the finite restriction to
/// [n] = {1, ..., n}. Membership of non-positive integers is always false.
///
/// Text syntax:
///   all            every positive integer
///   {2,3,5}        explicit finite set ({} is the empty set)
///   mod:k:r1,r2    z with z mod k in {r1, r2}; residue 0 means z = 0 mod k
///   geq:k          {k, k+1, ...}
///   A|B|...        union of any of the above
class IntegerSet {
 public:
  struct Explicit {
    std::vector<int> elements;  // sorted, unique, positive
  };
  struct Residues {
    int modulus;
    std::vector<int> residues;  // sorted, unique, in [0, modulus)
  };
  struct HalfLine {
    int threshold;
  };
  struct All {};
  struct Union {
    std::vector<IntegerSet> parts;
  };
  using Representation = std::variant<Explicit, Residues, HalfLine, All, Union>;

  /// The empty set.
  IntegerSet();

  static IntegerSet all();
  static IntegerSet none() { return IntegerSet(); }
  static IntegerSet of(std::vector<int> elements);
  static IntegerSet residues(int modulus, std::vector<int> residues);
  /// Multiples of k, i.e. kN.
  static IntegerSet multiples_of(int k) { return residues(k, {0}); }
  static IntegerSet evens() { return multiples_of(2); }
  static IntegerSet odds() { return residues(2, {1}); }
  static IntegerSet at_least(int threshold);
  static IntegerSet union_of(std::vector<IntegerSet> parts);
  /// Set with bit (i-1) of mask meaning i is a member.
  static IntegerSet from_mask(unsigned long long mask);

  static IntegerSet parse(std::string_view text);
  std::string to_string() const;

  bool contains(long long z) const;

  /// S_n = S intersect [n], always in explicit form.
  IntegerSet restrict(int n) const;
  /// S_n^c = [n] - S, always in explicit form.
  IntegerSet complement_in(int n) const;

  /// Sorted members of S_n.
  std::vector<int> members(int n) const;
  /// Sorted members of [n] - S.
  std::vector<int> non_members(int n) const;
  /// Lookup table of length n+1; entry z is 1 iff z is in S (entry 0 unused).
  std::vector<char> mask(int n) const;
  int count_upto(int n) const;

  const Representation& representation() const { return rep_; }

  /// Structural equality (same normalized text form).
  friend bool operator==(const IntegerSet& a, const IntegerSet& b) {
    return a.to_string() == b.to_string();
  }

 private:
  explicit IntegerSet(Representation rep) : rep_(std::move(rep)) {}
  Representation rep_;
};

}  // namespace descpoly
