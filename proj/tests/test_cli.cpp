#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "descpoly/output.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(DESCPOLY_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json cli_json(const std::string& args, int expect_code = 0) {
  const auto r = cli(args);
  CHECK(r.code == expect_code);
  return json::parse(r.out);
}

// Drops the lines that legitimately differ between runs: timing and the echoed command.
std::string without_elapsed(std::string text) {
  for (const char* key : {"elapsed_ms: ", "command: "}) {
    const auto at = text.find(key);
    if (at != std::string::npos) text.erase(at, text.find('\n', at) - at + 1);
  }
  return text;
}

}  // namespace

TEST_CASE("poly") {
  const auto j = cli_json("poly --n 6 --x '{2,3,4,6,7,9}' --y '{1,4,8}' --method formula1");
  CHECK(j["result"]["coefficients"]["2"] == "72");
  CHECK(j["result"]["trace"]["2"]["terms"] == json::array({"2016", "-6300", "4320"}));
  CHECK(cli_json("poly --n 3 --x all --y all --method brute")["result"]["coefficients"] ==
        json{{"0", "1"}, {"1", "4"}, {"2", "1"}});
  CHECK(cli_json("poly --n 2 --x '{}' --y all")["result"]["coefficients"] == json{{"0", "2"}});
}

TEST_CASE("every method gives the same polynomial") {
  const std::string base = "poly --n 7 --x '{2,3,5,7}' --y 'mod:3:1,2'";
  const auto want = cli_json(base + " --method brute")["result"]["coefficients"];
  for (const char* m : {"recursion", "formula1", "formula2", "rook"}) {
    CHECK(cli_json(base + " --method " + m)["result"]["coefficients"] == want);
  }
  const std::string xyz = "xyz --n 6 --x mod:2:0 --y mod:2:1 --z '{1,3}'";
  CHECK(cli_json(xyz)["result"]["coefficients"] == cli_json(xyz + " --method rook")["result"]["coefficients"]);
}

TEST_CASE("other commands") {
  CHECK(cli_json("foata --perm 61437258")["result"]["image"] == "43612758");
  CHECK(cli_json("foata --perm 43612758 --inverse")["result"]["image"] == "61437258");
  const auto board = cli_json("board --n 8 --x mod:2:0 --y all")["result"];
  CHECK(board["structure"] == json::array({0, 0, -1, -1, -2, -2, -3, -3}));
  CHECK(board["canonical_X"] == "{2,4,6,8}");
  CHECK(board["n"] == 8);
  CHECK(board["cells"].size() == 16);
  CHECK(cli_json("word-poly --rho 1,1 --x all --y all")["result"]["coefficients"] == json{{"0", "1"}, {"1", "1"}});
  CHECK(cli_json("q-poly --n 3")["result"]["at_q_1"] == json{{"0", "1"}, {"1", "4"}, {"2", "1"}});
  const auto cfg = cli_json("configs --n 6 --s 1 --x '{2,3,6}' --y '{1,2,5}' --flavor overline --apply 213+6-54");
  CHECK(cfg["result"]["trace"]["image"] == "213+6+54");
  const auto counts = cli_json("configs --n 4 --s 1 --x '{2,4}' --y all")["result"];
  CHECK(counts["signed_sum"] == counts["fixed_points"]);
  CHECK(cli_json("hypergeom eval --top=-1,2 --bottom 3")["result"]["value"] == "1/3");
}

TEST_CASE("verify") {
  const auto f = cli_json("verify --suite formulas --max-n 5");
  CHECK(f["result"]["ok"] == true);
  CHECK(f["result"]["reports"][0]["cases"]["formula1=brute"].get<long>() >= 1024 * 6);
  CHECK(cli("verify --suite foata --max-n 6").code == 0);
  CHECK(cli("verify --suite all --max-n 3").code == 0);
  for (const char* s : {"pfaff", "balanced", "cor35"}) {
    CHECK(cli(std::string("hypergeom verify --suite ") + s + " --max 5").code == 0);
  }
}

TEST_CASE("exit codes") {
  CHECK(cli("poly --n 11").code == 3);
  CHECK(cli("poly --n 11 --max-brute 11 --x '{}'").code == 0);
  CHECK(cli("poly --n 4 --z '{1}' --method formula1").code == 2);
  CHECK(cli("poly --n 4 --x 'mod:x'").code == 2);
  CHECK(cli("poly --n 4 --method magic").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("foata --perm 1123").code == 2);
  CHECK(cli("configs --n 5 --s 1 --apply 21345").code == 2);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("runs are deterministic and text matches JSON") {
  for (const char* args : {"poly --n 6 --x mod:2:0 --y all", "verify --suite configs --max-n 3 --seed 5",
                           "board --n 6 --x '{2,4,5}' --y '{1,3}'"}) {
    const auto a = cli(std::string(args) + " --format text");
    const auto b = cli(std::string(args) + " --format text");
    CHECK(without_elapsed(a.out) == without_elapsed(b.out));
    const auto j = cli_json(args);
    CHECK(without_elapsed(descpoly::flatten_text(j)) == without_elapsed(a.out));
  }
}
