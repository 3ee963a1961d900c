#include "descpoly/hypergeom.hpp"

#include <algorithm>
#include <numeric>

#include "descpoly/arith.hpp"
#include "descpoly/closed_forms.hpp"
#include "descpoly/errors.hpp"

namespace descpoly {

long termination_index(const HypergeometricSpec& spec) {
  long R = -1;
  for (long a : spec.top) {
    if (a <= 0 && (R < 0 || -a < R)) R = -a;
  }
  if (R < 0) throw IllPosedSeries("no non-positive integer numerator parameter; series does not terminate");
  for (long b : spec.bottom) {
    if (b <= 0 && -b < R) {
      throw IllPosedSeries("denominator parameter " + std::to_string(b) + " vanishes before term " + std::to_string(R));
    }
  }
  return R;
}

mpq_class eval_terminating(const HypergeometricSpec& spec) {
  const long R = termination_index(spec);
  mpq_class sum = 0;
  mpq_class term = 1;  // term r, updated by its ratio
  for (long r = 0; r <= R; ++r) {
    sum += term;
    if (r == R) break;
    mpz_class num = 1, den = r + 1;
    for (long a : spec.top) num *= a + r;
    for (long b : spec.bottom) den *= b + r;
    mpq_class ratio(num, den);
    ratio.canonicalize();  // den may be negative
    term *= ratio;
  }
  return sum;
}

bool is_balanced(const HypergeometricSpec& spec) {
  const long top = std::accumulate(spec.top.begin(), spec.top.end(), 0L);
  const long bottom = std::accumulate(spec.bottom.begin(), spec.bottom.end(), 0L);
  return top + 1 == bottom;
}

void UVProfile::validate() const {
  if (u.empty() || u.size() != v.size()) throw InconsistentProfile("u and v must be non-empty and of equal length");
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] < 0) throw InconsistentProfile("u entries must be non-negative");
    if (v[j] < 1) throw InconsistentProfile("v entries must be positive");
    if (j > 0 && u[j] < u[j - 1]) throw InconsistentProfile("u must be weakly increasing");
  }
}

int UVProfile::v_sum() const { return std::accumulate(v.begin(), v.end(), 0); }

int UVProfile::f(int i) const {
  int count = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] <= i && i <= u[j] + v[j] - 1) ++count;
  }
  return count;
}

int UVProfile::M() const {
  int top = 0;
  for (std::size_t j = 0; j < u.size(); ++j) top = std::max(top, u[j] + v[j]);
  return top - 1;
}

int UVProfile::minimal_n() const {
  validate();
  return std::max(v_sum() + M() + 1 - u.front(), v_sum() + M());
}

std::string tau_string(const UVProfile& profile, int n) {
  profile.validate();
  const int a = n - profile.v_sum();
  const int b = a - profile.M();
  if (b < 0) {
    throw InconsistentProfile("n = " + std::to_string(n) + " is too small for this profile (need n >= " +
                              std::to_string(profile.v_sum() + profile.M()) + ")");
  }
  std::string tau(static_cast<std::size_t>(b), '0');
  const int u1 = profile.u.front();
  for (int i = profile.M(); i >= u1; --i) {
    tau.append(static_cast<std::size_t>(profile.f(i)), '1');
    if (i > u1) tau += '0';
  }
  tau.append(static_cast<std::size_t>(u1), '0');
  return tau;
}

IntegerSet tau_sequence(const UVProfile& profile, int n) {
  const std::string tau = tau_string(profile, n);
  std::vector<int> xs;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (tau[i] == '1') xs.push_back(static_cast<int>(i) + 1);
  }
  return IntegerSet::of(std::move(xs));
}

IdentitySides verify_balanced_identity(const UVProfile& profile, int n, int s) {
  const IntegerSet X = tau_sequence(profile, n);
  const int a = n - profile.v_sum();
  const int k = profile.k();
  const auto& u = profile.u;
  const auto& v = profile.v;

  HypergeometricSpec lspec{{-(n + 1L), -static_cast<long>(s)}, {-static_cast<long>(s + a)}};
  mpz_class lpre = poch(s + 1, a);
  for (int i = 0; i < k; ++i) {
    lspec.top.push_back(-static_cast<long>(s + u[i]));
    lspec.bottom.push_back(-static_cast<long>(s + u[i] + v[i]));
    lpre *= poch(s + u[i] + 1, v[i]);
  }
  if (!is_balanced(lspec)) throw IllPosedSeries("left series is not balanced");

  HypergeometricSpec rspec{{-(n + 1L), static_cast<long>(s - n + a)}, {static_cast<long>(s - n)}};
  mpz_class rpre = poch(s - n, a);
  if (n % 2) rpre = -rpre;
  for (int i = 0; i < k; ++i) {
    rspec.top.push_back(s - n + u[i] + v[i]);
    rspec.bottom.push_back(s - n + u[i]);
    rpre *= poch(s - n + u[i], v[i]);
  }
  if (!is_balanced(rspec)) throw IllPosedSeries("right series is not balanced");

  IdentitySides out;
  out.left = mpq_class(lpre) * eval_terminating(lspec);
  out.right = rpre == 0 ? mpq_class(0) : mpq_class(rpre) * eval_terminating(rspec);
  out.P = formula_X_only_1(n, s, X);
  return out;
}

IdentitySides cor35_sides(int k, int m, int s) {
  const int n = (k + 1) * m;
  std::vector<int> xs;
  for (int i = 1; i <= n; ++i) {
    if (i % (k + 1) != 1) xs.push_back(i);
  }
  const IntegerSet X = IntegerSet::of(std::move(xs));

  HypergeometricSpec lspec{{-(n + 1L)}, {}};
  HypergeometricSpec rspec{{-(n + 1L)}, {}};
  mpz_class lpre = 1, rpre = 1;
  for (int i = 0; i <= k; ++i) {
    lspec.top.push_back(-s);
    lspec.bottom.push_back(-(m + s));
    rspec.top.push_back(-(k * m - s));
    rspec.bottom.push_back(-(n - s));
    lpre *= poch(s + 1, m);
    rpre *= poch(k * m + 1 - s, m);
  }
  IdentitySides out;
  out.left = mpq_class(lpre) * eval_terminating(lspec);
  out.right = mpq_class(rpre) * eval_terminating(rspec);
  out.P = formula_X_only_1(n, s, X);
  return out;
}

IdentitySides even_tops_series(int n, int s) {
  const HypergeometricSpec spec{{-static_cast<long>(s), -static_cast<long>(s), -(2L * n + 1)},
                                {-static_cast<long>(n + s), -static_cast<long>(n + s)}};
  const mpz_class pre = poch(s + 1, n);
  IdentitySides out;
  out.left = mpq_class(pre * pre) * eval_terminating(spec);
  out.P = even_tops_product(n, s);
  out.right = mpq_class(out.P);
  return out;
}

IdentitySides pfaff_saalschutz(int n, int a, int b, int c) {
  const HypergeometricSpec spec{{-static_cast<long>(n), a, b}, {c, static_cast<long>(a) + b - c - n + 1}};
  const mpz_class den = poch(c, n) * poch(c - a - b, n);
  if (den == 0) throw IllPosedSeries("(c)_n (c-a-b)_n vanishes");
  IdentitySides out;
  out.has_P = false;
  out.left = eval_terminating(spec);
  out.right = mpq_class(poch(c - a, n) * poch(c - b, n), den);
  out.right.canonicalize();
  return out;
}

}  // namespace descpoly
