#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <staircase/cli.hpp>

using namespace staircase;
using staircase::cli::fmt12;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

std::string last_field(const std::string& csv_line) {
  return csv_line.substr(csv_line.rfind(',') + 1);
}

}  // namespace

TEST_CASE("twelve significant digits") {
  CHECK(fmt12(0.5) == "0.5");
  CHECK(fmt12(2.0) == "2");
  CHECK(fmt12(1.0 / 3.0) == "0.333333333333");
  CHECK(fmt12(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("range parsing") {
  auto r = cli::parse_range("1:2:5");
  CHECK(r.lo == 1.0);
  CHECK(r.hi == 2.0);
  CHECK(r.count == 5);
  CHECK_FALSE(r.log_spaced);
  CHECK(cli::parse_range("0.5:8:25:log").log_spaced);
  CHECK_FALSE(cli::parse_range("0.5:8:25:linear").log_spaced);
  CHECK_THROWS_AS(cli::parse_range("1:2:1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("-1:2:5"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("2:1:5"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("1:2:5:weird"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("1:2"), std::invalid_argument);

  auto lin = cli::range_points(cli::parse_range("1:3:3"));
  REQUIRE(lin.size() == 3);
  CHECK(lin[0] == Catch::Approx(1.0));
  CHECK(lin[1] == Catch::Approx(2.0));
  CHECK(lin[2] == Catch::Approx(3.0));
  auto lg = cli::range_points(cli::parse_range("1:4:3:log"));
  CHECK(lg[1] == Catch::Approx(2.0));
}

TEST_CASE("class and family names") {
  CHECK(cli::polygon_class_from_string("gc") == PolygonClass::GC);
  CHECK(cli::polygon_family_from_string("SG") == PolygonFamily::SG);
  CHECK(cli::family_name(PolygonFamily::SG) == "SG");
  CHECK_THROWS_AS(cli::polygon_class_from_string("Q"),
                  std::invalid_argument);
}

TEST_CASE("enumerate command output") {
  const std::string out = cli::cmd_enumerate(2, "S");
  CHECK(out == cli::cmd_enumerate(2, "S"));  // byte determinism
  ordered_json doc = ordered_json::parse(out);
  CHECK(doc["half_length"] == 2);
  CHECK(doc["class"] == "S");
  REQUIRE(doc["terms"].size() == 1);
  CHECK(doc["terms"][0]["v"] == 1);
  CHECK(doc["terms"][0]["h"] == 2);
  CHECK(doc["terms"][0]["count"] == "1");
  CHECK(doc["total"] == "1");
  // reserialising is the identity
  CHECK(ordered_json::parse(out).dump(2) + "\n" == out);

  ordered_json empty = ordered_json::parse(cli::cmd_enumerate(1, "G"));
  CHECK(empty["terms"].empty());
  CHECK(empty["total"] == "0");

  CHECK_THROWS_AS(cli::cmd_enumerate(0, "S"), std::out_of_range);
  CHECK_THROWS_AS(cli::cmd_enumerate(13, "S"), std::out_of_range);
}

TEST_CASE("partition command output") {
  // P_{4}^{G}(a, y) = a y^2, so the log splits exactly
  const std::string js = cli::cmd_partition("G", 2, 2.0, 3.0, "json");
  ordered_json doc = ordered_json::parse(js);
  CHECK(doc["class"] == "G");
  CHECK(doc["half_length"] == 2);
  const double lv = std::stod(doc["log_value"].get<std::string>());
  CHECK(lv == Catch::Approx(std::log(18.0)).margin(1e-9));
  const double psi = std::stod(doc["psi"].get<std::string>());
  CHECK(psi == Catch::Approx(lv / 4.0).margin(1e-12));

  const auto csv = lines_of(cli::cmd_partition("G", 2, 2.0, 3.0, "csv"));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == "class,half_length,a,y,log_value,psi");
  CHECK(csv[1].substr(0, 4) == "G,2,");

  CHECK_THROWS_AS(cli::cmd_partition("G", 1, 2.0, 3.0, "csv"),
                  std::out_of_range);
  CHECK_THROWS_AS(cli::cmd_partition("G", 4, 0.0, 3.0, "csv"),
                  std::invalid_argument);
}

TEST_CASE("phase grid command output") {
  const auto ar = cli::parse_range("1:4:2");
  const auto yr = cli::parse_range("0.5:2:2");
  const std::string csv =
      cli::cmd_phase_grid(ModelKind::Grafted, 8, ar, yr, "csv");
  const auto ls = lines_of(csv);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "a,y,psi_closed,psi_estimate,V,H,phase");
  // a-major ordering: rows 1,2 carry a = 1, rows 3,4 carry a = 4
  CHECK(ls[1].substr(0, 6) == "1,0.5,");
  CHECK(ls[2].substr(0, 4) == "1,2,");
  CHECK(ls[3].substr(0, 6) == "4,0.5,");
  CHECK(last_field(ls[1]) == "Free");
  CHECK(last_field(ls[2]) == "Ballistic");
  CHECK(last_field(ls[3]) == "Adsorbed");
  CHECK(last_field(ls[4]) == "Mixed");

  ordered_json rows = ordered_json::parse(
      cli::cmd_phase_grid(ModelKind::Grafted, 8, ar, yr, "json"));
  REQUIRE(rows.size() == 4);
  CHECK(rows[3]["phase"] == "Mixed");
  CHECK(rows[0].contains("psi_closed"));
  CHECK(rows[0].contains("V"));

  // y = 1 is a switching line of the grafted model at every a
  cli::Range unit;
  unit.lo = unit.hi = 1.0;
  unit.count = 2;
  const auto bl = lines_of(
      cli::cmd_phase_grid(ModelKind::Grafted, 8,
                          cli::parse_range("0.5:8:3:log"), unit, "csv"));
  REQUIRE(bl.size() == 7);
  for (std::size_t i = 1; i < bl.size(); ++i)
    CHECK(last_field(bl[i]) == "Boundary");
}

TEST_CASE("verify command, fast suites") {
  for (const std::string suite : {"bounds", "appendix"}) {
    auto out = cli::cmd_verify(suite);
    CHECK(out.all_passed);
    CHECK(out.table.find("[PASS]") != std::string::npos);
    CHECK(out.table.find("[FAIL]") == std::string::npos);
    CHECK(out.table.find("suite " + suite + ": all checks passed") !=
          std::string::npos);
    ordered_json rep = ordered_json::parse(out.json_report);
    CHECK(rep["suite"] == suite);
    CHECK(rep["passed"] == true);
    CHECK(rep["checks"].size() == 1);
    CHECK(rep["checks"][0]["passed"] == true);
  }
  CHECK(suite_criteria("all").size() == 12);
  CHECK(suite_criteria("oracle").size() == 4);
  CHECK_THROWS_AS(suite_criteria("nope"), std::invalid_argument);
}

TEST_CASE("asymptotics report shape") {
  const std::string csv = cli::cmd_asymptotics_report(1, "csv");
  const auto ls = lines_of(csv);
  REQUIRE(ls.size() >= 2);
  CHECK(ls[0] == "section,point,n,quantity,value,target");
  bool saw_exponent = false, saw_scan = false, saw_bridge = false;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto& l = ls[i];
    CHECK(std::count(l.begin(), l.end(), ',') == 5);
    saw_exponent |= l.rfind("exponent,", 0) == 0;
    saw_scan |= l.rfind("scan_T,", 0) == 0;
    saw_bridge |= l.rfind("bridge,", 0) == 0;
  }
  CHECK(saw_exponent);
  CHECK(saw_scan);
  CHECK(saw_bridge);
  CHECK_THROWS_AS(cli::cmd_asymptotics_report(4, "csv"),
                  std::invalid_argument);
}

TEST_CASE("config files") {
  const std::string path = "cli_test_config.tmp";
  {
    std::ofstream f(path);
    f << "# comment line\n";
    f << "n = 6\n";
    f << "class = \"GC\"  # trailing comment\n";
    f << "a='2.5'\n";
    f << "\n";
    f << "not a pair\n";
  }
  auto cfg = cli::parse_config(path);
  std::remove(path.c_str());
  CHECK(cfg.size() == 3);
  CHECK(cfg.at("n") == "6");
  CHECK(cfg.at("class") == "GC");
  CHECK(cfg.at("a") == "2.5");
  CHECK_THROWS_AS(cli::parse_config("no_such_file.cfg"),
                  std::runtime_error);
}

TEST_CASE("output files are written verbatim") {
  const std::string path = "cli_test_out.tmp";
  const std::string content = "a,b\n1,2\n";
  cli::write_output(content, path);
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  std::remove(path.c_str());
  CHECK(ss.str() == content);
}
