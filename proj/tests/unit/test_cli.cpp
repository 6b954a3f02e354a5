#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using graded_lab::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kZn24 = GRADED_LAB_TEST_DATA "/zn24.json";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify gen:8 on Z_24") {
  Run r = cli({"classify", kZn24, "--submodule", "gen:8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("GW(N) = {2,4,8,10,14,16,20,22}") != std::string::npos);
  CHECK(r.out.find("weakly primal: no") != std::string::npos);
  CHECK(r.out.find("primal: yes") != std::string::npos);
}

TEST_CASE("classify --json") {
  Run r = cli({"classify", kZn24, "--submodule", "gen:8", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump().find("weakly_primal") != std::string::npos);
}

TEST_CASE("classify an integer instance") {
  const std::string path = "cli_z12.json";
  std::ofstream(path) << R"({"zinstance": {"m": 12}})";
  Run r = cli({"classify", path});
  CHECK(r.code == 0);
  CHECK_FALSE(r.out.empty());
}

TEST_CASE("examples reproduce prints four labeled blocks") {
  Run r = cli({"examples", "reproduce"});
  CHECK(r.code == 0);
  std::size_t blocks = 0;
  for (std::size_t p = r.out.find("== exm1."); p != std::string::npos; p = r.out.find("== exm1.", p + 1)) ++blocks;
  CHECK(blocks == 4);
  CHECK(r.out.find("Confirmed") != std::string::npos);
  CHECK(r.out.find("Discrepancy") != std::string::npos);
  CHECK(r.out.find("certificate: verified") != std::string::npos);
}

TEST_CASE("validate") {
  CHECK(cli({"validate", kZn24}).code == 0);
  Run bad = cli({"validate", GRADED_LAB_TEST_DATA "/broken.json"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("axiom violations:") != std::string::npos);
  CHECK(bad.err.find("NonDistributive") != std::string::npos);
  CHECK(cli({"validate", "does-not-exist.json"}).code == 1);
}

TEST_CASE("localize") {
  Run r = cli({"localize", kZn24, "--s", "5", "--submodule", "gen:8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("R_S: 24 classes") != std::string::npos);
  CHECK(cli({"localize", kZn24, "--s", "6"}).code == 1);
}

TEST_CASE("claims run") {
  const std::string budget = "cli_budget.json";
  std::ofstream(budget) << R"({"max_zn": 4, "max_quadratic_n": 0, "include_products": false,
                               "max_z_multiple": 3, "max_zn_instance": 4})";
  Run r = cli({"claims", "run", "--budget", budget, "--claim", "lem1", "--out", "cli_report.json"});
  CHECK(r.code == 0);
  std::ifstream in("cli_report.json");
  auto j = nlohmann::json::parse(in);
  CHECK(j["claims"].size() == 1);
  CHECK(cli({"claims", "run", "--budget", budget, "--claim", "bogus"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"classify", kZn24, "--submodule", "gen:5,x"}).code == 1);
}

}  // TEST_SUITE
