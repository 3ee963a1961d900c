#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "descpoly/integer_set.hpp"

namespace descpoly {

/// _{p}F_{q}[top; bottom] at argument 1 with integer parameters.
struct HypergeometricSpec {
  std::vector<long> top;
  std::vector<long> bottom;
};

/// Index of the last term: min of -a over non-positive top parameters a.
/// Throws IllPosedSeries if no top parameter is a non-positive integer, or if
/// a denominator Pochhammer (b)_r vanishes for some r up to that index.
long termination_index(const HypergeometricSpec& spec);

/// sum_{r=0}^{R} prod (a_i)_r / (r! prod (b_j)_r), exactly.
mpq_class eval_terminating(const HypergeometricSpec& spec);

/// Sum of top parameters + 1 equals sum of bottom parameters.
bool is_balanced(const HypergeometricSpec& spec);

/// Weakly increasing u >= 0 and positive v of the same length.
struct UVProfile {
  std::vector<int> u;
  std::vector<int> v;

  /// Throws InconsistentProfile on empty, unequal-length, decreasing u, negative u or non-positive v.
  void validate() const;
  int k() const { return static_cast<int>(u.size()); }
  int v_sum() const;
  /// f(i) = #{j : u_j <= i <= u_j + v_j - 1}
  int f(int i) const;
  /// M = max_j (u_j + v_j) - 1
  int M() const;
  /// Smallest n for which the identity is stated and the sequence exists.
  int minimal_n() const;
};

/// tau = 0^b 1^{f(M)} 0 1^{f(M-1)} 0 ... 0 1^{f(u_1)} 0^{u_1}, with a = n - sum v and b = a - M.
/// Throws InconsistentProfile when b < 0.
std::string tau_string(const UVProfile& profile, int n);
/// {i : tau_i = 1}
IntegerSet tau_sequence(const UVProfile& profile, int n);

struct IdentitySides {
  mpq_class left;
  mpq_class right;
  mpz_class P;          // P_{n,s}^X from the closed formula
  bool has_P = true;    // false for identities with no counting side
  bool holds() const { return left == right && (!has_P || left == mpq_class(P)); }
};

/// Both sides of the balanced-series identity for the tau-sequence set, and P_{n,s}^X.
///   left  = (s+1)_a prod (s+u_i+1)_{v_i} F[-(n+1), -s, -(s+u_i).. ; -(s+a), -(s+u_i+v_i)..]
///   right = (-1)^n (s-n)_a prod (s-n+u_i)_{v_i} F[-(n+1), s-n+a, s-n+u_i+v_i.. ; s-n, s-n+u_i..]
/// The right side is taken as 0 without evaluating its series when its prefactor vanishes.
IdentitySides verify_balanced_identity(const UVProfile& profile, int n, int s);

/// The two series for X = {i : i != 1 mod (k+1)}, n = (k+1)m, compared with P_{n,s}^X.
///   left  = (s+1)_m^{k+1} F[-(n+1), -s x(k+1) ; -(m+s) x(k+1)]
///   right = (km+1-s)_m^{k+1} F[-(n+1), -(km-s) x(k+1) ; -(n-s) x(k+1)]
IdentitySides cor35_sides(int k, int m, int s);

/// (s+1)_n^2 3F2[-s, -s, -(2n+1); -(n+s), -(n+s)] against (n!)^2 C(n,s)^2.
IdentitySides even_tops_series(int n, int s);

/// 3F2[-n, a, b; c, a+b-c-n+1] (left) against (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n) (right).
/// Throws IllPosedSeries when either side is undefined.
IdentitySides pfaff_saalschutz(int n, int a, int b, int c);

}  // namespace descpoly
