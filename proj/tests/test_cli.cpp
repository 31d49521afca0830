#include <string>

#include "doctest.h"
#include "support.hpp"

using testsupport::run_cli;
using testsupport::write_temp;

namespace {

const std::string kUnanimous = "3 3\n0 1 2\n0 1 2\n0 1 2\n";

}  // namespace

TEST_CASE("score: text output lists per-candidate rows and the winner set") {
  const std::string path = write_temp("unanimous.txt", kUnanimous);
  const auto r = run_cli("score --input " + path + " --format text");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("winners: 0") != std::string::npos);
  CHECK(r.output.find("(0, definitely)") != std::string::npos);
}

TEST_CASE("score: csv output is byte-identical across reruns") {
  const std::string path = write_temp("cycle.txt", "3 3\n0 1 2\n1 2 0\n2 0 1\n");
  const auto a = run_cli("score --input " + path + " --format csv");
  const auto b = run_cli("score --input " + path + " --format csv");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  // each candidate of the cycle has exact score 1
  CHECK(a.output.find("0,1,1,definitely") != std::string::npos);
  CHECK(a.output.find("# winners,0 1 2") != std::string::npos);
}

TEST_CASE("score: PrefLib SOC input expands to the same winners") {
  const std::string soc = write_temp(
      "toy.soc",
      "# NUMBER ALTERNATIVES: 3\n# ALTERNATIVE NAME 1: a\n"
      "3: 1,2,3\n");
  const std::string native = write_temp("toy_native.txt", kUnanimous);
  const auto from_soc = run_cli("score --input " + soc + " --format csv");
  const auto from_native = run_cli("score --input " + native + " --format csv");
  CHECK(from_soc.exit_code == 0);
  CHECK(from_soc.output == from_native.output);
}

TEST_CASE("score: parse errors exit 2 and name the line") {
  const std::string path = write_temp("broken.txt", "3 1\n0 0 2\n");
  const auto r = run_cli("score --input " + path, true);
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("line 2") != std::string::npos);
}

TEST_CASE("score: oversized instances exit 1 with the guard message") {
  std::string big = "12 41\n";
  for (int i = 0; i < 41; ++i) big += "0 1 2 3 4 5 6 7 8 9 10 11\n";
  const std::string path = write_temp("oversized.txt", big);
  const auto r = run_cli("score --input " + path, true);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("guard") != std::string::npos);
}

TEST_CASE("mc: identical bytes for identical configs, seed echoed") {
  const std::string args = "mc --grid 3x31 --trials 2000 --seed 9 --format csv";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("# seed=9 ") != std::string::npos);
  CHECK(a.output.find("event,m,n,trials,successes,p_hat,ci99_upper,bound,pass") !=
        std::string::npos);
  CHECK(a.output.find("not_nice,3,31,2000,") != std::string::npos);
  CHECK(a.output.find("any_candidate_maybe,3,31,2000,") != std::string::npos);
}

TEST_CASE("mc: SKC_SEED provides the default seed and is echoed") {
  const auto r = run_cli("mc --grid 3x11 --trials 200", false);
  CHECK(r.output.find("# seed=1 ") != std::string::npos);  // built-in default

  const std::string cmd = std::string("SKC_SEED=77 ") + SKC_CLI_PATH +
                          " mc --grid 3x11 --trials 200 2>/dev/null";
  testsupport::CliResult env_result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
    env_result.output.append(buf, got);
  pclose(pipe);
  CHECK(env_result.output.find("# seed=77 ") != std::string::npos);
}

TEST_CASE("mc: vacuous bounds pass, config errors exit 2") {
  // at (2, 5) both bounds exceed 1, so the rows pass vacuously
  const auto vac = run_cli("mc --grid 2x5 --trials 500 --seed 3 --format csv");
  CHECK(vac.exit_code == 0);

  CHECK(run_cli("mc --grid 3x31 --trials 0", true).exit_code == 2);
  CHECK(run_cli("mc --trials 100", true).exit_code == 2);       // no grid
  CHECK(run_cli("mc --grid bogus --trials 10", true).exit_code == 2);
  CHECK(run_cli("mc --grid 3x31 --no-such-flag 1", true).exit_code == 2);
}

TEST_CASE("junta: expected verdicts and exit codes per ensemble") {
  // over nu, almost-uniformity fails by construction: exit 1
  const auto nu = run_cli("junta --lengths 1..8 --format text");
  CHECK(nu.exit_code == 1);
  CHECK(nu.output.find("verdict balance pass") != std::string::npos);
  CHECK(nu.output.find("verdict dichotomy pass") != std::string::npos);
  CHECK(nu.output.find("verdict almost_uniformity fail") != std::string::npos);
  CHECK(nu.output.find("verdict heuristic_bound pass") != std::string::npos);
  CHECK(nu.output.find("hardness assumed-not-checked") != std::string::npos);

  // over the uniform ensemble the toy SAT language is unbalanced (most
  // strings fail syntactic decoding), though almost-uniformity holds
  const auto uni = run_cli("junta --lengths 1..8 --ensemble uniform --format text");
  CHECK(uni.exit_code == 1);
  CHECK(uni.output.find("verdict balance fail") != std::string::npos);
  CHECK(uni.output.find("verdict almost_uniformity pass") != std::string::npos);

  const auto a = run_cli("junta --lengths 1..8 --format csv");
  const auto b = run_cli("junta --lengths 1..8 --format csv");
  CHECK(a.output == b.output);
  CHECK(a.output.find("3,253/512,1/512,253") != std::string::npos);
}

TEST_CASE("wrapper-demo: twelve passing rows with the exact bound column") {
  const auto r = run_cli("wrapper-demo --lengths 1..12 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n,fraction_num,fraction_den,bound_num,bound_den,pass") !=
        std::string::npos);
  CHECK(r.output.find("12,") != std::string::npos);
  CHECK(r.output.find(",12,169,true") != std::string::npos);  // bound 12/169
  const auto again = run_cli("wrapper-demo --lengths 1..12 --format csv");
  CHECK(r.output == again.output);

  // out-of-range lengths are a usage error
  CHECK(run_cli("wrapper-demo --lengths 1..13", true).exit_code == 2);
}

TEST_CASE("wrapper-demo: explicit function tables are honored") {
  const std::string table = write_temp("table.txt",
                                       "0 5\n1 6\n00 1\n01 2\n10 3\n11 4\n");
  const auto r = run_cli("wrapper-demo --lengths 1..2 --input " + table +
                         " --format json-lines");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"target\"") != std::string::npos);

  const std::string sparse = write_temp("sparse_table.txt", "0 5\n");
  CHECK(run_cli("wrapper-demo --lengths 1..2 --input " + sparse, true).exit_code == 2);
}

TEST_CASE("json-lines output is one valid record per line") {
  const auto r = run_cli("mc --grid 3x11 --trials 100 --seed 4 --format json-lines");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("{\"record\":\"header\",\"command\":\"mc\"") == 0);
  CHECK(r.output.find("\"record\":\"row\"") != std::string::npos);
}
