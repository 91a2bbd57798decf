#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "jacring/field.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = jacring::cli::run(args, out, err);
  return Outcome{code, out.str(), err.str()};
}

const std::string kQuartic = "x0^4+x1^4+x2^4+x3^4";
const std::string kQuintic = "x0^5+x1^5+x2^5+x3^5+x4^5";
const std::string kFamily = "x0^4+x1^4+x2^4+x3^4-t*x0^2*x1^2";
const std::string kNodal = "x0^4+x1^4+x2^4+x3^4-2*x0^2*x1^2";

}  // namespace

TEST_CASE("hodge report for the quartic K3") {
  auto r = run({"hodge", "--poly", kQuartic, "--dim", "2"});
  REQUIRE(r.code == 0);
  auto j = r.report();
  CHECK(j["command"] == "hodge");
  CHECK(j["result"]["hodge_numbers"] == json::array({1, 19, 1}));
  CHECK(j["input"]["poly"] == kQuartic);
  CHECK(j["input"]["dim"] == 2);
  CHECK(j["config"]["prime"] == jacring::kDefaultPrime);
  CHECK(j["config"]["seed"] == 0);
  CHECK(j["config"]["samples"] == 8);
  CHECK(j["config"]["version"] == jacring::cli::kVersion);
  CHECK(j["warnings"].is_array());
}

TEST_CASE("zero polynomial is an input error") {
  auto r = run({"hilbert", "--poly", "0", "--vars", "3"});
  CHECK(r.code == 2);
  CHECK(r.report()["error"]["message"].get<std::string>().find("zero polynomial") !=
        std::string::npos);
  CHECK(r.err.find("zero polynomial") != std::string::npos);

  auto cancels = run({"hilbert", "--poly", "x0^2 - x0^2", "--vars", "2"});
  CHECK(cancels.code == 2);
  CHECK(cancels.err.find("zero polynomial") != std::string::npos);
}

TEST_CASE("yukawa on the Fermat quintic") {
  auto r = run({"yukawa", "--poly", kQuintic, "--dim", "3"});
  REQUIRE(r.code == 0);
  auto j = r.report()["result"];
  CHECK(j["d_M"] == 1);
  CHECK(j["verdict"] == "IMaximal");
  CHECK(j["theoretical_max"] == 1);
}

TEST_CASE("single Yukawa evaluation with --xi") {
  auto r = run({"yukawa", "--poly", kQuartic, "--dim", "2", "--xi", "x0^4"});
  REQUIRE(r.code == 0);
  CHECK(r.report()["result"]["rank"] == 0);
  auto s = run({"yukawa", "--poly", kQuartic, "--dim", "2", "--xi", "x0*x1*x2*x3"});
  CHECK(s.report()["result"]["rank"] == 1);
}

TEST_CASE("mathematical refusals exit with 1") {
  auto r = run({"hodge", "--poly", kNodal, "--dim", "2"});
  CHECK(r.code == 1);
  CHECK(r.report()["error"]["kind"] == "refusal");

  auto cone = run({"tjurina", "--poly", "x0^3+x1^3", "--vars", "4"});
  CHECK(cone.code == 1);
}

TEST_CASE("raw hodge mode reports dimensions of singular input") {
  auto r = run({"hodge", "--raw", "--poly", kNodal, "--dim", "2"});
  REQUIRE(r.code == 0);
  auto j = r.report();
  CHECK(j["result"]["graded_dims"] == json::array({1, 20, 18}));
  CHECK(j["result"]["artinian"] == false);
  CHECK(j["warnings"].size() == 1);
}

TEST_CASE("input errors name the offending token and exit with 2") {
  auto unknown = run({"frobnicate", "--poly", "x0"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("frobnicate") != std::string::npos);

  auto flag = run({"hodge", "--bogus", "1"});
  CHECK(flag.code == 2);
  CHECK(flag.err.find("--bogus") != std::string::npos);

  auto bad = run({"hodge", "--poly", "x0^4+y", "--dim", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("'y'") != std::string::npos);

  auto inhom = run({"hodge", "--poly", "x0^4+x1", "--dim", "2"});
  CHECK(inhom.code == 2);

  auto missing = run({"hodge", "--poly", kQuartic});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--dim") != std::string::npos);

  auto prime = run({"--prime", "100", "hodge", "--poly", kQuartic, "--dim", "2"});
  CHECK(prime.code == 2);
  CHECK(prime.err.find("100") != std::string::npos);

  auto weights = run({"hilbert", "--poly", "x0^2+x1^3", "--weights", "3,x"});
  CHECK(weights.code == 2);
  CHECK(weights.err.find("'x'") != std::string::npos);

  auto mode = run({"lefschetz", "--poly", kQuartic, "--mode", "medium"});
  CHECK(mode.code == 2);
  CHECK(mode.err.find("medium") != std::string::npos);
}

TEST_CASE("no command and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("hilbert compares against the complete-intersection series") {
  auto r = run({"hilbert", "--poly", kQuartic, "--degree", "1"});
  REQUIRE(r.code == 0);
  auto j = r.report()["result"];
  CHECK(j["hilbert_function"] == json::array({1, 4, 10, 16, 19, 16, 10, 4, 1}));
  CHECK(j["matches_ci_series"] == true);
  CHECK(j["artinian"] == true);
  CHECK(j["standard_monomials"] == json::array({"x0", "x1", "x2", "x3"}));

  auto weighted = run({"hilbert", "--ideal", "x0^2,x1", "--weights", "1,2"});
  REQUIRE(weighted.code == 0);
  CHECK(weighted.report()["result"]["hilbert_function"] == json::array({1, 1}));

  auto open = run({"hilbert", "--ideal", "x0^2", "--vars", "2", "--degree-cap", "5"});
  REQUIRE(open.code == 0);
  CHECK(open.report()["result"]["artinian"] == false);
  CHECK(open.report()["result"]["hilbert_function"] == json::array({1, 2, 2, 2, 2, 2}));
}

TEST_CASE("lefschetz on the (x^3, y^3, xy) algebra") {
  auto r = run({"lefschetz", "--ideal", "x0^3,x1^3,x0*x1"});
  REQUIRE(r.code == 0);
  auto j = r.report()["result"];
  CHECK(j["hilbert_function"] == json::array({1, 2, 2}));
  CHECK(j["outcome"] == "Obstructed");
  CHECK(j["obstruction"]["kind"] == "NotSymmetric");
  CHECK(j["socle_dimensions"] == json::array({0, 0, 2}));

  auto weak = run({"lefschetz", "--ideal", "x0^3,x1^3,x0*x1", "--mode", "wlp"});
  CHECK(weak.report()["result"]["outcome"] == "Witness");

  auto given = run({"lefschetz", "--ideal", "x0^3,x1^3,x0*x1", "--mode", "wlp", "--ell", "x0"});
  CHECK(given.report()["result"]["outcome"] == "Failure");
}

TEST_CASE("lefschetz witness on the Fermat quartic") {
  auto r = run({"lefschetz", "--poly", kQuartic});
  REQUIRE(r.code == 0);
  CHECK(r.report()["result"]["outcome"] == "Witness");
  CHECK(r.report()["result"]["report"]["witness"] == true);
}

TEST_CASE("torelli and classify") {
  auto k3 = run({"torelli", "--poly", kQuartic, "--dim", "2"});
  CHECK(k3.report()["result"]["rank"] == 19);
  CHECK(k3.report()["result"]["injective"] == true);

  auto cubic = run({"torelli", "--poly", "x0^3+x1^3+x2^3+x3^3", "--dim", "2"});
  CHECK(cubic.report()["result"]["rank"] == 0);
  CHECK(cubic.report()["result"]["injective"] == false);

  auto cy = run({"classify", "--dim", "3", "--degrees", "5"});
  CHECK(cy.report()["result"]["kappa"] == 0);
  CHECK(cy.report()["result"]["classification"] == "CalabiYau");

  auto quadric = run({"classify", "--dim", "2", "--degrees", "2"});
  CHECK(quadric.report()["result"]["quadric_hypersurface"] == true);

  auto mismatch = run({"classify", "--dim", "2", "--degrees", "2,3", "--codim", "1"});
  CHECK(mismatch.code == 2);

  auto weighted = run({"classify", "--dim", "1", "--degrees", "6", "--weights", "1,2,3"});
  CHECK(weighted.report()["result"]["weighted_socle"] == 0);
}

TEST_CASE("tjurina and delta on the nodal quartic") {
  auto cayley = run({"tjurina", "--poly", "x0*x1*x2+x0*x1*x3+x0*x2*x3+x1*x2*x3"});
  CHECK(cayley.report()["result"]["tjurina_total"] == 4);

  auto d4 = run({"delta", "--poly", kNodal, "--degree", "4"});
  CHECK(d4.report()["result"]["delta"] == 1);
  CHECK(d4.report()["warnings"].empty());

  auto d2 = run({"delta", "--poly", kNodal, "--degree", "2"});
  auto j = d2.report();
  CHECK(j["result"]["delta"] == 0);
  CHECK(j["result"]["dim_R_k"] == 10);
  REQUIRE(j["warnings"].size() == 1);
  CHECK(j["warnings"][0].get<std::string>().find("dim R_2 = dim S_2 = 10") != std::string::npos);
}

TEST_CASE("family-scan JSON and CSV") {
  auto r = run({"family-scan", "--family", kFamily, "--dim", "2", "--t-values", "0,1,2,3"});
  REQUIRE(r.code == 0);
  auto rows = r.report()["result"]["rows"];
  REQUIRE(rows.size() == 4);
  CHECK(rows[0]["smooth"] == true);
  CHECK(rows[1]["smooth"] == true);
  CHECK(rows[2]["smooth"] == false);
  CHECK(rows[3]["smooth"] == true);
  CHECK(rows[0]["yukawa_rank"] == 1);
  CHECK(rows[2]["yukawa_rank"].is_null());

  auto csv = run({"family-scan", "--family", kFamily, "--dim", "2", "--t-values", "0,2",
                  "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out ==
        "t,smooth,dim_a0,dim_mid,dim_sigma,dim_sigma_plus1,tjurina,yukawa_rank,delta\n"
        "0,true,1,19,1,0,0,1,0\n"
        "2,false,1,20,18,18,18,,1\n");

  auto zero = run({"family-scan", "--family", "(1-t)*(x0^2+x1^2+x2^2)", "--dim", "1",
                   "--t-values", "1", "--format", "csv"});
  CHECK(zero.out.find("1,false,,,,,,,") != std::string::npos);

  CHECK(run({"hodge", "--poly", kQuartic, "--dim", "2", "--format", "csv"}).code == 2);
}

TEST_CASE("rational arithmetic gives the same Hodge numbers") {
  auto r = run({"--rational", "hodge", "--poly", kQuartic, "--dim", "2"});
  REQUIRE(r.code == 0);
  auto j = r.report();
  CHECK(j["config"]["prime"].is_null());
  CHECK(j["config"]["field"] == "QQ");
  CHECK(j["result"]["hodge_numbers"] == json::array({1, 19, 1}));
}

TEST_CASE("JACRING_PRIME sets the default prime, --prime overrides it") {
  ::setenv("JACRING_PRIME", "101", 1);
  auto env = run({"hilbert", "--poly", "x0^3+x1^3+x2^3"});
  auto flag = run({"--prime", "103", "hilbert", "--poly", "x0^3+x1^3+x2^3"});
  ::unsetenv("JACRING_PRIME");
  CHECK(env.report()["config"]["prime"] == 101);
  CHECK(flag.report()["config"]["prime"] == 103);
  CHECK(env.report()["result"]["hilbert_function"] == json::array({1, 3, 3, 1}));
}

TEST_CASE("check-primes reports agreement") {
  auto r = run({"--check-primes", "yukawa", "--poly", kQuartic, "--dim", "2"});
  REQUIRE(r.code == 0);
  auto a = r.report()["result"]["prime_agreement"];
  CHECK(a["agree"] == true);
  CHECK(a["primes"].size() == 3);
}

TEST_CASE("reports are byte-identical across reruns and thread counts") {
  const std::vector<std::vector<std::string>> commands = {
      {"hilbert", "--poly", kQuartic},
      {"hodge", "--poly", kQuartic, "--dim", "2"},
      {"lefschetz", "--poly", kQuartic, "--seed", "7"},
      {"yukawa", "--poly", kQuartic, "--dim", "2", "--seed", "11", "--samples", "3"},
      {"torelli", "--poly", "x0^3+x1^3+x2^3", "--dim", "1"},
      {"classify", "--dim", "3", "--degrees", "5"},
      {"family-scan", "--family", kFamily, "--dim", "2", "--t-values", "0,1/2,2,3"},
      {"tjurina", "--poly", kNodal},
      {"delta", "--poly", kNodal, "--degree", "2"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd[0]);
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  std::vector<std::string> scan = commands[6];
  auto one = run(scan);
  scan.insert(scan.begin(), {"--threads", "4"});
  CHECK(run(scan).out == one.out);
}
