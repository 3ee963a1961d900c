#include "descpoly/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "descpoly/closed_forms.hpp"
#include "descpoly/configurations.hpp"
#include "descpoly/errors.hpp"
#include "descpoly/hypergeom.hpp"
#include "descpoly/rook.hpp"
#include "descpoly/stats.hpp"
#include "descpoly/words.hpp"

namespace descpoly {

long SuiteReport::total_cases() const {
  long t = 0;
  for (const auto& [name, count] : cases) t += count;
  return t;
}

void SuiteReport::fail(const std::string& check, nlohmann::json detail) {
  if (failures++ == 0) {
    detail["check"] = check;
    first_failure = std::move(detail);
  }
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["max_n"] = max_n;
  j["cases"] = cases;
  j["total_cases"] = total_cases();
  j["failures"] = failures;
  j["ok"] = ok();
  j["first_failure"] = first_failure;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"formulas", "configs", "words", "rook", "foata", "hypergeom"};
  return names;
}

namespace {

using nlohmann::json;
using Rng = std::mt19937_64;

std::string str(const mpz_class& v) { return v.get_str(); }
std::string str(const mpq_class& v) { return v.get_str(); }

SuiteReport report(std::string name, int max_n) {
  SuiteReport r;
  r.suite = std::move(name);
  r.max_n = max_n;
  return r;
}

json poly_json(const IntPolynomial& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
  return j;
}

IntegerSet random_subset(Rng& rng, int n) {
  if (n <= 0) return IntegerSet::none();
  return IntegerSet::from_mask(rng() & ((1ULL << n) - 1));
}

// Check one equality, counting the case.
template <class T>
bool expect_eq(SuiteReport& rep, const std::string& check, const T& got, const T& want, json ctx) {
  ++rep.cases[check];
  if (got == want) return true;
  if constexpr (std::is_same_v<T, IntPolynomial>) {
    ctx["got"] = poly_json(got);
    ctx["want"] = poly_json(want);
  } else if constexpr (std::is_same_v<T, mpz_class> || std::is_same_v<T, mpq_class>) {
    ctx["got"] = str(got);
    ctx["want"] = str(want);
  } else {
    ctx["got"] = got;
    ctx["want"] = want;
  }
  rep.fail(check, std::move(ctx));
  return false;
}

json pair_ctx(int n, const IntegerSet& X, const IntegerSet& Y) {
  return json{{"n", n}, {"X", X.restrict(n).to_string()}, {"Y", Y.restrict(n).to_string()}};
}

SuiteReport formulas_suite(int max_n) {
  SuiteReport rep = report("formulas", std::min(max_n, 7));
  for (int n = 1; n <= rep.max_n; ++n) {
    const unsigned long long full = 1ULL << n;
    for (unsigned long long xm = 0; xm < full; ++xm) {
      const IntegerSet X = IntegerSet::from_mask(xm);
      const int x_size = std::popcount(xm);
      for (unsigned long long ym = 0; ym < full; ++ym) {
        const IntegerSet Y = IntegerSet::from_mask(ym);
        const IntPolynomial brute = brute_poly(n, DescentQuery{X, Y, IntegerSet::all()}, n);
        const json ctx = pair_ctx(n, X, Y);
        for (int s = 0; s <= n; ++s) {
          json c = ctx;
          c["s"] = s;
          expect_eq(rep, "formula1=brute", formula_alpha_beta(n, s, X, Y), brute.coeff(s), c);
          expect_eq(rep, "formula2=brute", formula_beta_beta(n, s, X, Y), brute.coeff(s), c);
        }
        for (int s = x_size + 1; s <= n + 2; ++s) {
          json c = ctx;
          c["s"] = s;
          expect_eq(rep, "vanishing tail", formula_alpha_beta(n, s, X, Y), mpz_class(0), c);
        }
        if (n <= 6) {
          const BivarPolynomial rec = recursion_bivar(n, X, Y);
          expect_eq(rep, "recursion=brute", rec.eval_second(1), brute, ctx);
          ++rep.cases["coefficient recursion=recursion"];
          if (!(coefficient_recursion_bivar(n, X, Y) == rec)) {
            rep.fail("coefficient recursion=recursion", ctx);
          }
        }
      }
    }
  }
  return rep;
}

void configs_for(SuiteReport& rep, const ConfigContext& ctx, const IntPolynomial& brute, json where) {
  where["flavor"] = flavor_name(ctx.flavor());
  where["s"] = ctx.s();
  mpz_class signed_sum = 0;
  long fixed = 0;
  for (int r = 0; r <= ctx.sign_total(); ++r) {
    json c = where;
    c["r"] = r;
    long count = 0;
    bool involution_ok = true;
    json bad;
    for_each_config(ctx, r, [&](const Configuration& cfg) {
      ++count;
      signed_sum += cfg.weight();
      const Configuration image = involution(cfg, ctx);
      if (image == cfg) {
        ++fixed;
      } else if (!(involution(image, ctx) == cfg) || std::abs(image.minus_count() - cfg.minus_count()) != 1) {
        if (involution_ok) bad = cfg.to_string();
        involution_ok = false;
      }
    });
    expect_eq(rep, "count=staged", mpz_class(count), staged_count(ctx, r), c);
    ++rep.cases["I(I(c))=c, sign-reversing"];
    if (!involution_ok) {
      c["configuration"] = bad;
      rep.fail("I(I(c))=c, sign-reversing", c);
    }
  }
  expect_eq(rep, "signed sum=P", signed_sum, brute.coeff(ctx.s()), where);
  expect_eq(rep, "fixed points=P", mpz_class(fixed), brute.coeff(ctx.s()), where);
}

SuiteReport configs_suite(int max_n, Rng& rng) {
  SuiteReport rep = report("configs", std::min(max_n, 5));
  constexpr int kPairs = 50;
  for (int n = 1; n <= rep.max_n; ++n) {
    for (int p = 0; p < kPairs; ++p) {
      const IntegerSet X = random_subset(rng, n);
      const IntegerSet Y = random_subset(rng, n);
      const IntPolynomial brute = brute_poly(n, DescentQuery{X, Y, IntegerSet::all()}, n);
      for (Flavor f : {Flavor::Standard, Flavor::Overline}) {
        for (int s = 0; s <= n; ++s) {
          configs_for(rep, ConfigContext::permutations(f, n, s, X, Y), brute, pair_ctx(n, X, Y));
        }
      }
    }
  }
  // one random pair per composition for the word flavors
  for (int n = 1; n <= std::min(rep.max_n, 4); ++n) {
    for (const auto& rho : all_compositions(n)) {
      const IntegerSet X = random_subset(rng, rho.m());
      const IntegerSet Y = random_subset(rng, rho.m());
      const IntPolynomial brute = word_brute_poly(rho, X, Y);
      json where = pair_ctx(rho.m(), X, Y);
      where["rho"] = rho.to_string();
      for (Flavor f : {Flavor::WordStandard, Flavor::WordOverline}) {
        for (int s = 0; s <= n; ++s) configs_for(rep, ConfigContext::words(f, rho, s, X, Y), brute, where);
      }
    }
  }
  return rep;
}

SuiteReport words_suite(int max_n) {
  SuiteReport rep = report("words", std::min(max_n, 7));
  for (int n = 1; n <= rep.max_n; ++n) {
    for (const auto& rho : all_compositions(n)) {
      const int m = rho.m();
      for (unsigned long long xm = 0; xm < (1ULL << m); ++xm) {
        const IntegerSet X = IntegerSet::from_mask(xm);
        for (unsigned long long ym = 0; ym < (1ULL << m); ++ym) {
          const IntegerSet Y = IntegerSet::from_mask(ym);
          const IntPolynomial brute = word_brute_poly(rho, X, Y);
          json ctx = pair_ctx(m, X, Y);
          ctx["rho"] = rho.to_string();
          for (int s = 0; s <= n; ++s) {
            json c = ctx;
            c["s"] = s;
            expect_eq(rep, "word formula1=enumeration", word_formula_1(rho, s, X, Y), brute.coeff(s), c);
            expect_eq(rep, "word formula2=enumeration", word_formula_2(rho, s, X, Y), brute.coeff(s), c);
          }
        }
      }
    }
  }
  return rep;
}

SuiteReport rook_suite(int max_n, Rng& rng) {
  SuiteReport rep = report("rook", std::min(max_n, 7));
  constexpr int kQueries = 100;
  for (int n = 1; n <= rep.max_n; ++n) {
    for (int p = 0; p < kQueries; ++p) {
      DescentQuery q{random_subset(rng, n), random_subset(rng, n), IntegerSet::all()};
      if (n > 1 && rng() % 2) q.Z = random_subset(rng, n - 1);
      json ctx = pair_ctx(n, q.X, q.Y);
      ctx["Z"] = q.Z.restrict(n).to_string();
      const Board B = board_from_query(n, q);
      const auto enumerated = hit_numbers_enumerated(B, n);
      const auto from_rooks = hit_numbers_from_rooks(B);
      const IntPolynomial brute = brute_poly(n, q, n);
      expect_eq(rep, "hits enumerated=hits from rooks", IntPolynomial::from_coefficients(enumerated),
                IntPolynomial::from_coefficients(from_rooks), ctx);
      expect_eq(rep, "hit polynomial=P", IntPolynomial::from_coefficients(from_rooks), brute, ctx);
    }
  }
  // the distinct-rows reduction, exhaustively
  const int n = std::min(rep.max_n, 6);
  for (unsigned long long xm = 0; xm < (1ULL << n); ++xm) {
    for (unsigned long long ym = 0; ym < (1ULL << n); ++ym) {
      const IntegerSet X = IntegerSet::from_mask(xm), Y = IntegerSet::from_mask(ym);
      json ctx = pair_ctx(n, X, Y);
      const Board B = board_from_query(n, DescentQuery{X, Y, IntegerSet::all()});
      try {
        const CanonicalBoard canon = canonical_distinct_rows(B);
        ctx["X'"] = canon.X.to_string();
        ++rep.cases["same structure multiset"];
        if (!rook_equivalent(height_structure(B), canon.shape)) rep.fail("same structure multiset", ctx);
        auto rows = canon.shape.row_lengths();
        std::erase(rows, 0);
        std::sort(rows.begin(), rows.end());
        ++rep.cases["distinct rows"];
        if (std::adjacent_find(rows.begin(), rows.end()) != rows.end()) rep.fail("distinct rows", ctx);
        expect_eq(rep, "P^{X,Y}=P^{X'}", brute_poly(n, DescentQuery{canon.X, IntegerSet::all(), IntegerSet::all()}, n),
                  brute_poly(n, DescentQuery{X, Y, IntegerSet::all()}, n), ctx);
      } catch (const NotFerrers& e) {
        ctx["error"] = e.what();
        ++rep.cases["P^{X,Y}=P^{X'}"];
        rep.fail("P^{X,Y}=P^{X'}", ctx);
      }
    }
  }
  return rep;
}

SuiteReport foata_suite(int max_n, Rng& rng) {
  SuiteReport rep = report("foata", std::min(max_n, 7));
  constexpr int kQueries = 10;
  for (int n = 1; n <= rep.max_n; ++n) {
    std::vector<DescentQuery> queries;
    for (int p = 0; p < kQueries; ++p) {
      DescentQuery q{random_subset(rng, n), random_subset(rng, n), IntegerSet::all()};
      if (n > 1 && p % 2) q.Z = random_subset(rng, n - 1);
      queries.push_back(std::move(q));
    }
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    do {
      const Permutation omega(v);
      const Permutation phi = foata(omega);
      const json ctx{{"omega", omega.to_string()}};
      ++rep.cases["inverse(foata(w))=w"];
      if (!(foata_inverse(phi) == omega)) rep.fail("inverse(foata(w))=w", ctx);
      ++rep.cases["foata(inverse(w))=w"];
      if (!(foata(foata_inverse(omega)) == omega)) rep.fail("foata(inverse(w))=w", ctx);
      for (const auto& q : queries) {
        ++rep.cases["des(foata(w))=U-excedences(w)"];
        if (des_count(phi.values(), q) != u_excedences(omega, q)) {
          json c = ctx;
          c["X"] = q.X.restrict(n).to_string();
          c["Y"] = q.Y.restrict(n).to_string();
          c["Z"] = q.Z.restrict(n).to_string();
          rep.fail("des(foata(w))=U-excedences(w)", c);
        }
      }
    } while (std::next_permutation(v.begin(), v.end()));
    for (const auto& q : queries) {
      json ctx = pair_ctx(n, q.X, q.Y);
      ctx["Z"] = q.Z.restrict(n).to_string();
      expect_eq(rep, "hits_via_foata=brute", hits_via_foata(n, q), brute_poly(n, q, n), ctx);
      expect_eq(rep, "excedence poly=brute", excedence_poly(n, q, n), brute_poly(n, q, n), ctx);
    }
  }
  return rep;
}

void identity_case(SuiteReport& rep, const std::string& check, const IdentitySides& sides, json ctx) {
  ++rep.cases[check];
  if (sides.holds()) return;
  ctx["left"] = str(sides.left);
  ctx["right"] = str(sides.right);
  if (sides.has_P) ctx["P"] = str(sides.P);
  rep.fail(check, std::move(ctx));
}

void pfaff_sweep(SuiteReport& rep, int max) {
  const int top_n = std::min(max, 5);
  for (int n = 0; n <= top_n; ++n) {
    for (int a = -5; a <= 0; ++a) {
      for (int b = -5; b <= 0; ++b) {
        for (int c = -15; c <= 15; ++c) {
          const json ctx{{"n", n}, {"a", a}, {"b", b}, {"c", c}};
          try {
            identity_case(rep, "pfaff-saalschutz", pfaff_saalschutz(n, a, b, c), ctx);
          } catch (const IllPosedSeries&) {
            ++rep.cases["pfaff-saalschutz skipped (ill-posed)"];
          }
        }
      }
    }
  }
}

void balanced_case(SuiteReport& rep, const UVProfile& prof, int n) {
  for (int s = 0; s <= n; ++s) {
    const json ctx{{"u", prof.u}, {"v", prof.v}, {"n", n}, {"s", s}};
    try {
      identity_case(rep, "balanced", verify_balanced_identity(prof, n, s), ctx);
    } catch (const std::exception& e) {
      json c = ctx;
      c["error"] = e.what();
      ++rep.cases["balanced"];
      rep.fail("balanced", c);
    }
  }
}

void balanced_sweep(SuiteReport& rep, int max) {
  const UVProfile example{{0, 1, 1, 5}, {2, 3, 1, 2}};
  balanced_case(rep, example, 16);
  const int top = std::min(max, 3);
  for (int u1 = 0; u1 <= top; ++u1) {
    for (int v1 = 1; v1 <= top; ++v1) {
      const UVProfile one{{u1}, {v1}};
      balanced_case(rep, one, one.minimal_n());
      for (int u2 = u1; u2 <= top; ++u2) {
        for (int v2 = 1; v2 <= top; ++v2) {
          const UVProfile two{{u1, u2}, {v1, v2}};
          balanced_case(rep, two, two.minimal_n());
        }
      }
    }
  }
}

void cor35_sweep(SuiteReport& rep, int max) {
  for (int k = 1; k <= 3; ++k) {
    for (int m = 1; (k + 1) * m <= std::max(max, 2) * 2; ++m) {
      for (int s = 0; s <= k * m; ++s) {
        identity_case(rep, "cor35", cor35_sides(k, m, s), json{{"k", k}, {"m", m}, {"s", s}});
      }
    }
  }
  for (int n = 1; n <= std::max(max, 1); ++n) {
    for (int s = 0; s <= n; ++s) {
      identity_case(rep, "even tops series", even_tops_series(n, s), json{{"n", n}, {"s", s}});
    }
  }
}

}  // namespace

SuiteReport run_hypergeom_suite(const std::string& which, int max) {
  SuiteReport rep = report(which, max);
  if (which == "pfaff") {
    pfaff_sweep(rep, max);
  } else if (which == "balanced") {
    balanced_sweep(rep, max);
  } else if (which == "cor35") {
    cor35_sweep(rep, max);
  } else {
    throw std::invalid_argument("unknown hypergeometric suite '" + which + "'");
  }
  return rep;
}

std::vector<SuiteReport> run_suite(const std::string& suite, int max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SuiteReport> out;
  auto run_one = [&](const std::string& name) {
    if (name == "formulas") {
      out.push_back(formulas_suite(max_n));
    } else if (name == "configs") {
      out.push_back(configs_suite(max_n, rng));
    } else if (name == "words") {
      out.push_back(words_suite(max_n));
    } else if (name == "rook") {
      out.push_back(rook_suite(max_n, rng));
    } else if (name == "foata") {
      out.push_back(foata_suite(max_n, rng));
    } else if (name == "hypergeom") {
      SuiteReport rep = report("hypergeom", max_n);
      for (const char* which : {"pfaff", "balanced", "cor35"}) {
        const SuiteReport part = run_hypergeom_suite(which, max_n);
        for (const auto& [check, count] : part.cases) rep.cases[check] += count;
        if (!part.ok() && rep.ok()) rep.first_failure = part.first_failure;
        rep.failures += part.failures;
      }
      out.push_back(std::move(rep));
    } else {
      throw std::invalid_argument("unknown suite '" + name + "'");
    }
  };
  if (suite == "all") {
    for (const auto& name : suite_names()) run_one(name);
  } else {
    run_one(suite);
  }
  return out;
}

}  // namespace descpoly
