#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "descpoly/closed_forms.hpp"
#include "descpoly/configurations.hpp"
#include "descpoly/errors.hpp"
#include "descpoly/hypergeom.hpp"
#include "descpoly/output.hpp"
#include "descpoly/rook.hpp"
#include "descpoly/stats.hpp"
#include "descpoly/verify.hpp"
#include "descpoly/words.hpp"

using namespace descpoly;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::string format = "json";
  int max_brute = kDefaultBruteCap;
  std::uint64_t seed = 1;
  std::string command;
};

void emit(const Globals& g, const OutputRecord& rec) {
  if (g.format == "text") {
    std::cout << rec.to_text();
  } else {
    std::cout << rec.to_json().dump(2) << '\n';
  }
}

// Runs body, times it and prints the record. body returns the exit code.
int run(const Globals& g, const std::string& method, json inputs, const std::function<int(json&)>& body) {
  OutputRecord rec;
  rec.command = g.command;
  rec.inputs = std::move(inputs);
  rec.method = method;
  const auto start = std::chrono::steady_clock::now();
  json result = json::object();
  const int code = body(result);
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rec.result = std::move(result);
  emit(g, rec);
  return code;
}

IntegerSet parse_set(const std::string& text) { return IntegerSet::parse(text); }

struct PolyArgs {
  int n = 0;
  std::string x = "all", y = "all";
  std::optional<std::string> z;
  std::string method = "brute";
};

int cmd_poly(const Globals& g, const PolyArgs& a) {
  DescentQuery q{parse_set(a.x), parse_set(a.y), a.z ? parse_set(*a.z) : IntegerSet::all()};
  if (!q.z_is_all() && a.method != "brute" && a.method != "rook") {
    throw UsageError("method " + a.method + " needs Z = all; use brute or rook");
  }
  json inputs{{"n", a.n}, {"x", q.X.to_string()}, {"y", q.Y.to_string()}, {"z", q.Z.to_string()}};
  return run(g, a.method, inputs, [&](json& result) {
    IntPolynomial p;
    if (a.method == "brute") {
      p = brute_poly(a.n, q, g.max_brute);
    } else if (a.method == "recursion") {
      p = recursion_bivar(a.n, q.X, q.Y).eval_second(1);
    } else if (a.method == "formula1" || a.method == "formula2") {
      json trace = json::object();
      for (int s = 0; s <= a.n; ++s) {
        const FormulaTrace t = a.method == "formula1" ? formula_alpha_beta_trace(a.n, s, q.X, q.Y)
                                                      : formula_beta_beta_trace(a.n, s, q.X, q.Y);
        p.add_term(s, t.value);
        json terms = json::array();
        for (const auto& term : t.terms) terms.push_back(term.get_str());
        trace[std::to_string(s)] = json{{"prefactor", t.prefactor.get_str()}, {"terms", terms}};
      }
      result["trace"] = trace;
    } else if (a.method == "rook") {
      p = IntPolynomial::from_coefficients(hit_numbers_from_rooks(board_from_query(a.n, q)));
    } else {
      throw UsageError("unknown method '" + a.method + "'");
    }
    result["coefficients"] = coefficient_map(p);
    return kExitOk;
  });
}

int cmd_word_poly(const Globals& g, const std::string& rho_text, const std::string& x, const std::string& y,
                  const std::string& method) {
  const CompositionSpec rho = CompositionSpec::parse(rho_text);
  const IntegerSet X = parse_set(x), Y = parse_set(y);
  json inputs{{"rho", rho.to_string()}, {"x", X.to_string()}, {"y", Y.to_string()}};
  return run(g, method, inputs, [&](json& result) {
    IntPolynomial p;
    if (method == "brute") {
      p = word_brute_poly(rho, X, Y);
    } else if (method == "formula1" || method == "formula2") {
      for (int s = 0; s <= rho.n(); ++s) {
        p.add_term(s, method == "formula1" ? word_formula_1(rho, s, X, Y) : word_formula_2(rho, s, X, Y));
      }
    } else {
      throw UsageError("unknown method '" + method + "'");
    }
    result["coefficients"] = coefficient_map(p);
    return kExitOk;
  });
}

int cmd_board(const Globals& g, int n, const std::string& x, const std::string& y, const std::optional<std::string>& z) {
  DescentQuery q{parse_set(x), parse_set(y), z ? parse_set(*z) : IntegerSet::all()};
  json inputs{{"n", n}, {"x", q.X.to_string()}, {"y", q.Y.to_string()}, {"z", q.Z.to_string()}};
  return run(g, "board", inputs, [&](json& result) {
    const Board B = board_from_query(n, q);
    json cells = json::array();
    for (const auto& [i, j] : B.cells()) cells.push_back(json::array({i, j}));
    result["n"] = n;
    result["cells"] = cells;
    json ascii = json::array();
    std::string line;
    for (char c : B.to_ascii()) {
      if (c == '\n') {
        ascii.push_back(line);
        line.clear();
      } else {
        line += c;
      }
    }
    if (!line.empty()) ascii.push_back(line);
    result["ascii"] = ascii;
    result["ferrers"] = is_ferrers(B);
    result["heights"] = nullptr;
    result["structure"] = nullptr;
    result["canonical_X"] = nullptr;
    if (is_ferrers(B)) {
      const FerrersShape shape = height_structure(B);
      result["heights"] = shape.heights;
      result["structure"] = shape.structure();
      try {
        result["canonical_X"] = canonical_distinct_rows(B).X.to_string();
      } catch (const NotFerrers&) {
      }
    }
    std::vector<std::string> rooks;
    for (const auto& r : rook_numbers(B)) rooks.push_back(r.get_str());
    result["rook_numbers"] = rooks;
    result["hit_numbers"] = coefficient_map(IntPolynomial::from_coefficients(hit_numbers_from_rooks(B)));
    return kExitOk;
  });
}

int cmd_foata(const Globals& g, const std::string& perm, bool inverse) {
  const Permutation w = Permutation::parse(perm);
  return run(g, inverse ? "foata-inverse" : "foata", json{{"perm", w.to_string()}, {"inverse", inverse}},
             [&](json& result) {
               result["image"] = (inverse ? foata_inverse(w) : foata(w)).to_string();
               return kExitOk;
             });
}

struct ConfigArgs {
  std::optional<int> n;
  std::optional<std::string> rho;
  std::string x = "all", y = "all", flavor = "standard";
  int s = 0;
  std::optional<int> r;
  bool list = false;
  std::optional<std::string> apply;
};

int cmd_configs(const Globals& g, const ConfigArgs& a) {
  if (a.n.has_value() == a.rho.has_value()) throw UsageError("give exactly one of --n and --rho");
  const IntegerSet X = parse_set(a.x), Y = parse_set(a.y);
  const Flavor f = parse_flavor(a.flavor);
  const ConfigContext ctx = a.n ? ConfigContext::permutations(f, *a.n, a.s, X, Y)
                                : ConfigContext::words(f, CompositionSpec::parse(*a.rho), a.s, X, Y);
  json inputs{{"rho", ctx.rho().to_string()}, {"x", X.to_string()}, {"y", Y.to_string()},
              {"s", a.s},   {"flavor", flavor_name(ctx.flavor())}};
  if (a.r) inputs["r"] = *a.r;
  if (a.apply) inputs["apply"] = *a.apply;
  return run(g, "enumerate", inputs, [&](json& result) {
    if (a.apply) {
      const Configuration c = Configuration::parse(*a.apply);
      const Configuration image = involution(c, ctx);
      result["trace"] = json{{"input", c.to_string()}, {"image", image.to_string()}, {"fixed", image == c},
                             {"back", involution(image, ctx).to_string()}};
      return kExitOk;
    }
    json per_r = json::object();
    mpz_class signed_sum = 0;
    long fixed = 0;
    const int lo = a.r.value_or(0), hi = a.r.value_or(ctx.sign_total());
    for (int r = lo; r <= hi; ++r) {
      long count = 0, fixed_r = 0;
      json listing = json::array();
      for_each_config(ctx, r, [&](const Configuration& c) {
        ++count;
        signed_sum += c.weight();
        const Configuration image = involution(c, ctx);
        if (image == c) ++fixed_r;
        if (a.list) listing.push_back(json{{"config", c.to_string()}, {"image", image.to_string()}});
      });
      fixed += fixed_r;
      json entry{{"count", std::to_string(count)}, {"staged", staged_count(ctx, r).get_str()},
                 {"fixed_points", std::to_string(fixed_r)}};
      if (a.list) entry["configs"] = listing;
      per_r[std::to_string(r)] = entry;
    }
    result["by_r"] = per_r;
    if (!a.r) {
      result["signed_sum"] = signed_sum.get_str();
      result["fixed_points"] = std::to_string(fixed);
    }
    return kExitOk;
  });
}

int cmd_qpoly(const Globals& g, int n, const std::string& x) {
  const IntegerSet X = parse_set(x);
  return run(g, "q-recursion", json{{"n", n}, {"x", X.to_string()}}, [&](json& result) {
    const BivarPolynomial p = q_recursion(n, X);
    result["coefficients"] = coefficient_map(p);  // "i,j" = x^i q^j
    result["at_q_1"] = coefficient_map(p.eval_second(1));
    return kExitOk;
  });
}

int report_suites(const Globals& g, const std::string& method, json inputs,
                  const std::function<std::vector<SuiteReport>()>& make) {
  return run(g, method, std::move(inputs), [&](json& result) {
    const auto reports = make();
    json arr = json::array();
    bool ok = true;
    for (const auto& rep : reports) {
      arr.push_back(rep.to_json());
      if (!rep.ok()) {
        ok = false;
        if (!result.contains("first_failure")) result["first_failure"] = rep.first_failure;
      }
    }
    result["reports"] = arr;
    result["ok"] = ok;
    return ok ? kExitOk : kExitVerify;
  });
}

int cmd_hypergeom_eval(const Globals& g, const std::vector<long>& top, const std::vector<long>& bottom) {
  const HypergeometricSpec spec{top, bottom};
  return run(g, "terminating", json{{"top", top}, {"bottom", bottom}}, [&](json& result) {
    result["value"] = eval_terminating(spec).get_str();
    result["terms"] = termination_index(spec) + 1;
    result["balanced"] = is_balanced(spec);
    return kExitOk;
  });
}

std::string join_argv(int argc, char** argv) {
  std::string out = "descpoly";
  for (int i = 1; i < argc; ++i) {
    out += ' ';
    out += argv[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descent polynomials with prescribed tops, bottoms and differences"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  g.command = join_argv(argc, argv);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-brute", g.max_brute, "Largest n for brute-force enumeration");
  app.add_option("--seed", g.seed, "Seed for randomized suites");

  std::function<int()> action;

  PolyArgs poly;
  auto* poly_cmd = app.add_subcommand("poly", "P_n^{X,Y(,Z)}(x)");
  poly_cmd->add_option("--n", poly.n)->required()->check(CLI::NonNegativeNumber);
  poly_cmd->add_option("--x", poly.x, "Set of allowed tops");
  poly_cmd->add_option("--y", poly.y, "Set of allowed bottoms");
  poly_cmd->add_option("--z", poly.z, "Set of allowed differences");
  poly_cmd->add_option("--method", poly.method)
      ->check(CLI::IsMember({"brute", "recursion", "formula1", "formula2", "rook"}));
  poly_cmd->callback([&] { action = [&] { return cmd_poly(g, poly); }; });

  PolyArgs xyz;
  auto* xyz_cmd = app.add_subcommand("xyz", "poly with a difference set");
  xyz_cmd->add_option("--n", xyz.n)->required()->check(CLI::NonNegativeNumber);
  xyz_cmd->add_option("--x", xyz.x);
  xyz_cmd->add_option("--y", xyz.y);
  xyz_cmd->add_option("--z", xyz.z)->required();
  xyz_cmd->add_option("--method", xyz.method)->check(CLI::IsMember({"brute", "rook"}));
  xyz_cmd->callback([&] { action = [&] { return cmd_poly(g, xyz); }; });

  std::string rho, wx = "all", wy = "all", wmethod = "brute";
  auto* word_cmd = app.add_subcommand("word-poly", "Descent polynomial over R(rho)");
  word_cmd->add_option("--rho", rho, "Composition such as 2,3,1")->required();
  word_cmd->add_option("--x", wx);
  word_cmd->add_option("--y", wy);
  word_cmd->add_option("--method", wmethod)->check(CLI::IsMember({"brute", "formula1", "formula2"}));
  word_cmd->callback([&] { action = [&] { return cmd_word_poly(g, rho, wx, wy, wmethod); }; });

  int bn = 0;
  std::string bx = "all", by = "all";
  std::optional<std::string> bz;
  auto* board_cmd = app.add_subcommand("board", "The board of a descent query");
  board_cmd->add_option("--n", bn)->required()->check(CLI::Range(0, 64));
  board_cmd->add_option("--x", bx);
  board_cmd->add_option("--y", by);
  board_cmd->add_option("--z", bz);
  board_cmd->callback([&] { action = [&] { return cmd_board(g, bn, bx, by, bz); }; });

  std::string perm;
  bool inverse = false;
  auto* foata_cmd = app.add_subcommand("foata", "Foata's first transformation");
  foata_cmd->add_option("--perm", perm)->required();
  foata_cmd->add_flag("--inverse", inverse);
  foata_cmd->callback([&] { action = [&] { return cmd_foata(g, perm, inverse); }; });

  ConfigArgs cfg;
  auto* cfg_cmd = app.add_subcommand("configs", "Signed configurations and the involution");
  cfg_cmd->add_option("--n", cfg.n);
  cfg_cmd->add_option("--rho", cfg.rho);
  cfg_cmd->add_option("--x", cfg.x);
  cfg_cmd->add_option("--y", cfg.y);
  cfg_cmd->add_option("--s", cfg.s)->required();
  cfg_cmd->add_option("--r", cfg.r);
  cfg_cmd->add_option("--flavor", cfg.flavor)
      ->check(CLI::IsMember({"standard", "overline", "word-standard", "word-overline"}));
  cfg_cmd->add_flag("--list", cfg.list, "List every configuration with its image");
  cfg_cmd->add_option("--apply", cfg.apply, "Apply the involution to one configuration");
  cfg_cmd->callback([&] { action = [&] { return cmd_configs(g, cfg); }; });

  int qn = 0;
  std::string qx = "all";
  auto* q_cmd = app.add_subcommand("q-poly", "P_n^X(q,x) from the q-recursion");
  q_cmd->add_option("--n", qn)->required()->check(CLI::NonNegativeNumber);
  q_cmd->add_option("--x", qx);
  q_cmd->callback([&] { action = [&] { return cmd_qpoly(g, qn, qx); }; });

  auto* hyp_cmd = app.add_subcommand("hypergeom", "Terminating hypergeometric series");
  hyp_cmd->require_subcommand(1);
  std::string hsuite;
  int hmax = 5;
  auto* hverify = hyp_cmd->add_subcommand("verify", "Check an identity over a grid");
  hverify->add_option("--suite", hsuite)->required()->check(CLI::IsMember({"pfaff", "balanced", "cor35"}));
  hverify->add_option("--max", hmax)->check(CLI::NonNegativeNumber);
  hverify->callback([&] {
    action = [&] {
      return report_suites(g, "hypergeom-" + hsuite, json{{"suite", hsuite}, {"max", hmax}},
                           [&] { return std::vector<SuiteReport>{run_hypergeom_suite(hsuite, hmax)}; });
    };
  });
  std::vector<long> top, bottom;
  auto* heval = hyp_cmd->add_subcommand("eval", "Evaluate one terminating series at 1");
  heval->add_option("--top", top)->required()->delimiter(',');
  heval->add_option("--bottom", bottom)->delimiter(',');
  heval->callback([&] { action = [&] { return cmd_hypergeom_eval(g, top, bottom); }; });

  std::string suite;
  int max_n = 5;
  auto* verify_cmd = app.add_subcommand("verify", "Invariant sweeps");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);
  verify_cmd->callback([&] {
    action = [&] {
      return report_suites(g, "verify", json{{"suite", suite}, {"max_n", max_n}, {"seed", g.seed}},
                           [&] { return run_suite(suite, max_n, g.seed); });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const LimitExceeded& e) {
    std::cerr << json{{"error", "cap exceeded"}, {"message", e.what()}}.dump() << '\n';
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return kExitUsage;
  }
}
