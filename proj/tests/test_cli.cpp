#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

// End-to-end checks against the installed binary. Each invocation runs in a
// fresh process with the cache pinned to a file under the test scratch dir,
// so nothing here touches the user's cache or depends on run order.
namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::filesystem::path& scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("akzeta_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::vector<std::string>& args,
                  const std::string& cache_path = "") {
  const auto out_file = scratch_dir() / "out.txt";
  const auto err_file = scratch_dir() / "err.txt";
  std::string cmd = "AKZETA_CACHE=" + shell_quote(cache_path) + " " +
                    shell_quote(AKZETA_CLI_PATH);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " > " + shell_quote(out_file.string()) + " 2> " +
         shell_quote(err_file.string());
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_file);
  r.err = slurp(err_file);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("index operations round-trip through the binary") {
  auto r = run_cli({"index", "dual", "(1,2)"});
  CHECK(r.code == 0);
  CHECK(r.out == "(3)\n");

  r = run_cli({"index", "hdual", "(2,1)"});
  CHECK(r.code == 0);
  CHECK(r.out == "(1,2)\n");

  r = run_cli({"index", "rev", "(1,2,3)"});
  CHECK(r.code == 0);
  CHECK(r.out == "(3,2,1)\n");

  r = run_cli({"index", "minus", "(2,3)"});
  CHECK(r.code == 0);
  CHECK(r.out == "(2,2)\n");

  r = run_cli({"index", "blocks", "(1,1,3,2)"});
  CHECK(r.code == 0);
  CHECK(r.out == "[(3,2),(1,1)]\n");
}

TEST_CASE("inadmissible input to dual exits 2 with a diagnostic") {
  const auto r = run_cli({"index", "dual", "(2,1)"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(contains(r.err, "not admissible"));
}

TEST_CASE("eval prints reference values in positional notation") {
  auto r = run_cli({"eval", "zeta", "(3)"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1.202056903159594"));
  CHECK(contains(r.out, "radius"));

  r = run_cli({"eval", "xi", "(1)", "--m", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "2.404113806319188"));

  r = run_cli({"eval", "li", "(2)", "--z", "0.5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "0.582240526465012"));

  // pi^2/8, the depth-one value at 2 on the odd-denominator lattice
  r = run_cli({"eval", "t", "(2)"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1.233700550136169"));
}

TEST_CASE("eval rejects out-of-domain requests") {
  CHECK(run_cli({"eval", "li", "(2)"}).code == 2);
  CHECK(run_cli({"eval", "li", "(2)", "--z", "1.5"}).code == 2);
  CHECK(run_cli({"eval", "zeta", "(3)", "--prec", "32"}).code == 2);
  CHECK(run_cli({"eval", "zeta", "(2,1)"}).code == 2);
  CHECK(run_cli({"eval", "xi", "(2)", "--m", "0"}).code == 2);
}

TEST_CASE("verify exits 0 on pass, 1 on numeric failure, 2 on bad input") {
  auto r = run_cli({"verify", "xi-duality", "--k", "(2)", "--m", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "pass"));

  r = run_cli({"verify", "xi-duality", "--k", "(2)", "--rhs-shift", "1e-10"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL"));

  CHECK(run_cli({"verify", "li-reflection", "--k", "(2)", "--z-grid", "0.99"})
            .code == 2);
  CHECK(run_cli({"verify", "li-reflection"}).code == 2);
  CHECK(run_cli({"verify", "xi-duality-block", "--a", "2", "--m", "1"}).code ==
        2);
  CHECK(run_cli({"verify", "no-such-identity", "--k", "(2)"}).code == 2);
}

TEST_CASE("verify --json emits a machine-readable report") {
  const auto r =
      run_cli({"verify", "xi-duality", "--k", "(2)", "--m", "1", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["identity"] == "xi-duality");
  CHECK(j["pass"] == true);
  CHECK(j["params"]["k"] == nlohmann::json::array({2}));
  CHECK(j["points"].size() == 1);
}

TEST_CASE("verify --list names every identity") {
  const auto r = run_cli({"verify", "--list"});
  REQUIRE(r.code == 0);
  for (const std::string name :
       {"li-reflection", "a-reflection", "li-reflection-depth1",
        "li-reflection-block", "xi-zeta-expansion", "psi-t-expansion",
        "xi-zeta-expansion-block", "xi-duality", "psi-duality",
        "xi-duality-block", "xi-duality-multi"}) {
    CHECK(contains(r.out, name));
  }
}

TEST_CASE("multi-block duality records the adjudicated reading") {
  const auto r = run_cli({"verify", "xi-duality-multi", "--a", "1", "--m", "1",
                          "--ks", "(2,3)", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["params"]["reading"] == "corrected");

  const auto pinned = run_cli({"verify", "xi-duality-multi", "--a", "1", "--m",
                               "1", "--ks", "(2,3)", "--reading",
                               "as-printed"});
  CHECK(pinned.code == 1);
}

TEST_CASE("argument errors and help use the documented exit codes") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"index", "frobnicate", "(2)"}).code == 2);
  CHECK(run_cli({"suite", "frobnicate"}).code == 2);
}

TEST_CASE("fast suites run clean through the binary") {
  auto r = run_cli({"suite", "combinatorics", "--max-weight", "8", "--quiet"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "suite combinatorics: pass"));

  r = run_cli({"suite", "posets", "--max-weight", "3", "--quiet"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "suite posets: pass"));
  CHECK(contains(r.out, "holder-preflight"));
}

TEST_CASE("cache subcommands report and reset state") {
  const auto cache = (scratch_dir() / "cache.txt").string();

  auto r = run_cli({"cache", "path"}, cache);
  CHECK(r.code == 0);
  CHECK(contains(r.out, cache));

  r = run_cli({"cache", "path"});
  CHECK(contains(r.out, "(disabled)"));

  run_cli({"eval", "zeta", "(3)"}, cache);
  r = run_cli({"cache", "stats"}, cache);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "entries: 1"));

  r = run_cli({"cache", "clear"}, cache);
  CHECK(r.code == 0);
  r = run_cli({"cache", "stats"}, cache);
  CHECK(contains(r.out, "entries: 0"));
}

TEST_CASE("warm-cache reruns reproduce midpoints bit for bit") {
  const auto cache = (scratch_dir() / "stable.txt").string();
  const std::vector<std::string> cmd = {"verify", "xi-duality", "--k", "(2,2)",
                                        "--m",    "2",          "--json"};
  const auto first = run_cli(cmd, cache);
  REQUIRE(first.code == 0);
  const auto second = run_cli(cmd, cache);
  REQUIRE(second.code == 0);
  const auto j1 = nlohmann::json::parse(first.out);
  const auto j2 = nlohmann::json::parse(second.out);
  CHECK(j1["points"][0]["lhs"] == j2["points"][0]["lhs"]);
  CHECK(j1["points"][0]["rhs"] == j2["points"][0]["rhs"]);
}

TEST_CASE("poset subcommands expose the word map and integrals") {
  auto r = run_cli({"poset", "wmap", R"({"labels":[1,0],"covers":[[0,1]]})"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");

  r = run_cli(
      {"poset", "wmap", R"({"labels":[1,0,1,0],"covers":[[0,1],[2,3],[1,3]]})"});
  CHECK(r.code == 0);
  CHECK(r.out == "1010 + 2*1100\n");

  r = run_cli({"poset", "transpose", R"({"labels":[1,0],"covers":[[0,1]]})"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["labels"] == nlohmann::json::array({0, 1}));

  // the two-chain with word 10 integrates to zeta(2)
  r = run_cli({"poset", "eval", R"({"labels":[1,0],"covers":[[0,1]]})"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1.644934066848226"));

  r = run_cli({"poset", "eval", R"({"labels":[1,0],"covers":[[0,1]]})", "--z",
               "0.5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "0.582240526465012"));

  CHECK(run_cli({"poset", "wmap", R"({"labels":[0,1])"}).code == 2);
  CHECK(run_cli({"poset", "eval", R"({"labels":[0,1],"covers":[[0,1]]})"})
            .code == 2);
}
