#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "sincov/cli.hpp"
#include "sincov/io.hpp"
#include "sincov/report.hpp"

using namespace sincov;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sincov");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) {
  return std::string(SINCOV_SOURCE_DIR) + "/tests/data/" + name;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("sincov_cli_" + name)).string();
}

}  // namespace

TEST_CASE("report envelope") {
  auto r = cli({"validate", "--in", data("ratio_2_1.csv"), "--law", "mult-eq"});
  REQUIRE(r.code == kExitOk);
  auto j = r.json();
  CHECK(j["command"] == "validate");
  CHECK(j["version"] == kVersion);
  CHECK(j["tolerance"]["rel"] == 1e-9);
  CHECK(j["tolerance"]["exact"] == false);
  CHECK(j["result"]["pass"] == true);
  CHECK(j["result"]["checked_triples"] == 8);
}

TEST_CASE("validate failure exits 1") {
  auto r = cli({"validate", "--in", data("sum_1_2.csv"), "--law", "mult-eq"});
  CHECK(r.code == kExitFailure);
  CHECK(r.json()["result"]["pass"] == false);
  CHECK(cli({"validate", "--in", data("sum_1_2.csv"), "--law", "mult-ineq"}).code == kExitOk);
}

TEST_CASE("extremal output feeds back into validate") {
  const auto emitted = temp_path("extremal.csv");
  auto r = cli({"extremal", "--in", data("sum_1_2.csv"), "--x0", "1", "--y0", "1", "--exact",
                "--emit", emitted});
  REQUIRE(r.code == kExitOk);
  auto j = r.json();
  CHECK(j["result"]["witness"] == "1");
  CHECK(j["result"]["solution"]["matrix"][1][0] == "2/3");
  auto v = cli({"validate", "--in", emitted, "--law", "mult-eq", "--exact"});
  CHECK(v.code == kExitOk);
  std::remove(emitted.c_str());
}

TEST_CASE("zeros on the F3 grid") {
  auto r = cli({"zeros", "--in", data("f3_grid.csv"), "--exact"});
  REQUIRE(r.code == kExitOk);
  auto s = r.json()["result"]["structure"];
  CHECK(s["zero_count"] == 3);
  CHECK(s["full_zero_rows"] == 1);
  CHECK(s["violated_count"] == 0);
  for (const auto& a : s["anchors"]) {
    CHECK(a["kind"] == "RowContained");
    CHECK(a["a"] == "1");
  }
}

TEST_CASE("closure cycle report names labels") {
  const auto path = temp_path("cycle.json");
  write_file(path, R"({"labels":["u","v"],"mode":"additive","matrix":[[0,-1],[-1,0]]})");
  auto r = cli({"closure", "--in", path});
  CHECK(r.code == kExitFailure);
  auto res = r.json()["result"];
  CHECK(res["weight"] == "-2");
  REQUIRE(res["cycle"].size() == 3);
  CHECK((res["cycle"][0] == "u" || res["cycle"][0] == "v"));
  std::remove(path.c_str());
}

TEST_CASE("violation list is capped") {
  std::ostringstream csv;
  csv << "";
  for (int i = 0; i < 11; ++i) csv << ",p" << i;
  csv << "\n";
  for (int i = 0; i < 11; ++i) {
    csv << "p" << i;
    for (int k = 0; k < 11; ++k) csv << ",0.5";
    csv << "\n";
  }
  const auto path = temp_path("half.csv");
  write_file(path, csv.str());
  auto r = cli({"validate", "--in", path, "--law", "mult-ineq"});
  CHECK(r.code == kExitFailure);
  auto res = r.json()["result"];
  CHECK(res["total_violations"] == 1331);
  CHECK(res["violations"].size() == kReportViolationCap);
  CHECK(res["truncated"] == true);
  std::remove(path.c_str());
}

TEST_CASE("--out writes the report to a file") {
  const auto path = temp_path("report.json");
  auto r = cli({"audit", "--in", data("ratio_2_1.csv"), "--out", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  auto j = Json::parse(read_file(path));
  CHECK(j["command"] == "audit");
  CHECK(j["result"]["positive"] == true);
  std::remove(path.c_str());
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(cli({"--help"}).code == kExitOk);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"validate", "--in", data("ratio_2_1.csv")}).code == kExitUsage);
  CHECK(cli({"validate", "--in", data("ratio_2_1.csv"), "--law", "triangle", "--mode",
             "multiplicative"})
            .code == kExitUsage);
  CHECK(cli({"validate", "--in", "/nonexistent.csv", "--law", "mult-eq"}).code == kExitUsage);
  auto dom = cli({"tilde", "--in", data("f3_grid.csv")});
  CHECK(dom.code == kExitUsage);
  CHECK_FALSE(dom.err.empty());
}

TEST_CASE("generate, solve-eq and oracle") {
  auto g = cli({"generate", "--kind", "ratio", "--potential", "2,1", "--exact"});
  REQUIRE(g.code == kExitOk);
  CHECK(g.json()["result"]["matrix"][1][0] == "1/2");

  auto s = cli({"solve-eq", "--in", data("ratio_2_1.csv")});
  CHECK(s.code == kExitOk);
  CHECK(s.json()["result"]["kind"] == "potential");
  CHECK(cli({"solve-eq", "--in", data("sum_1_2.csv")}).code == kExitFailure);

  auto o = cli({"oracle", "--kind", "bounded", "--n", "40", "--seed", "3"});
  REQUIRE(o.code == kExitOk);
  bool skipped = false;
  const Json verdicts = o.json()["result"]["verdicts"];
  for (const auto& v : verdicts) skipped = skipped || v["verdict"] == "skipped";
  CHECK(skipped);
  CHECK(cli({"oracle", "--kind", "bounded", "--n", "40", "--claim", "t2"}).code == kExitUsage);
}

TEST_CASE("quotient of the probe instance") {
  auto r = cli({"quotient", "--in", data("h_probe.json")});
  REQUIRE(r.code == kExitOk);
  CHECK(r.json()["result"]["classes"] == 2);
}

TEST_CASE("bench report") {
  auto r = cli({"bench", "--n", "16", "--reps", "2"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.json()["result"]["identical"] == true);
}
