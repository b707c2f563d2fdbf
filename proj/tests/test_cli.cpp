#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "lech/io.hpp"
#include "support/process.hpp"

using lech::io::Json;

namespace {

const std::string kCli = LECH_CLI_PATH;

proc::Result cli(const std::string& args, bool merge = false) { return proc::run(kCli + " " + args, merge); }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "lech_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("mult reports agreeing methods") {
  const auto r = cli("mult --ring poly:2 --ideal 'x^3,x*y,y^3' --method both");
  REQUIRE(r.exit_code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["e"] == 6);
  CHECK(doc["methods_agree"] == true);
}

TEST_CASE("verify exit codes distinguish pass and rejection") {
  auto r = cli("verify --ring poly:2 --ideal 'x, y' --bounds lech");
  CHECK(r.exit_code == 0);
  auto doc = Json::parse(r.out);
  CHECK(doc["status"] == "pass");
  CHECK(doc["bounds"][0]["strict"] == true);
  CHECK(doc["bounds"][0].contains("note"));
  r = cli("verify --ring poly:2 --ideal 'x^2, y^2' --bounds mfull2");
  CHECK(r.exit_code == 1);
  CHECK(Json::parse(r.out)["status"] == "rejected");
}

TEST_CASE("input errors exit with 2 and JSON on stderr") {
  auto r = cli("mult --ring poly:2 --ideal 'x^3, w'", true);
  CHECK(r.exit_code == 2);
  const auto doc = Json::parse(r.out);
  CHECK(doc["error"] == "UnknownVariable");
  CHECK(doc["position"] == 5);
  CHECK(cli("mult --ring poly:0 --ideal x").exit_code == 2);
  CHECK(cli("nonsense").exit_code == 2);
}

TEST_CASE("search writes 18 rows for colength <= 5") {
  const auto path = scratch("search5.csv");
  REQUIRE(cli("search --ring poly:2 --max-colength 5 --format csv --out " + path.string()).exit_code == 0);
  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 19);
}

TEST_CASE("closure, sup-curve, tgraded and bracket") {
  auto r = cli("closure --ring poly:2 --ideal 'x^2, y^2'");
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.out)["closure"] == "x^2, x*y, y^2");

  r = cli("sup-curve --ring 'semigroup:[[2,0],[1,1],[0,2]]' --cutoffs 2,4");
  REQUIRE(r.exit_code == 0);
  auto doc = Json::parse(r.out);
  CHECK(doc["rows"].size() == 2);
  CHECK(doc["uniform"]["epsilon_positive"] == true);

  const auto spec = scratch("j.json");
  std::ofstream(spec) << R"({"base": "poly:1", "components": [[[2]], [[1]]], "K": 2})";
  r = cli("tgraded --spec " + spec.string() + " --check mingens");
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.out)["tight"] == true);
  r = cli("bracket --spec " + spec.string() + " --q 2,4,8");
  REQUIRE(r.exit_code == 0);
  CHECK(Json::parse(r.out)["steps"][2]["length"] == 192);
}

TEST_CASE("run with a config file") {
  const auto config = scratch("run.json");
  const auto out = scratch("run_out.json");
  std::ofstream(config) << R"({"ring": "poly:2", "bounds": "lech,colength",
      "enumeration": {"mode": "by_colength", "max_colength": 4}, "output": ")" +
                               out.string() + R"("})";
  REQUIRE(cli("run --config " + config.string()).exit_code == 0);
  std::ifstream in(out);
  const auto doc = Json::parse(in);
  CHECK(doc["rows"].size() == 2 * 11);
}
