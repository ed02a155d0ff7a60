#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gft/io.hpp"
#include "test_support.hpp"

using namespace gft;
using gft::testing::Rng;
using nlohmann::json;

TEST_CASE("series JSON round trip is exact") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const TaylorSeries f = rng.series(rng.integer(0, 70), 1e3 * rng.uniform());
    CHECK(io::series_from_json(json::parse(io::series_to_json(f).dump())) == f);
  }
  const TaylorSeries tiny{Complex{5e-324, -1.7976931348623157e308}};
  CHECK(io::series_from_json(json::parse(io::series_to_json(tiny).dump())) == tiny);
}

TEST_CASE("series JSON shape") {
  const json j = io::series_to_json(TaylorSeries{0.0, Complex{1.0, -2.0}});
  CHECK(j == json::parse(R"({"coeffs": [[0.0, 0.0], [1.0, -2.0]]})"));
}

TEST_CASE("series JSON rejects malformed input") {
  for (const char* text : {R"({})", R"({"coeffs": []})", R"({"coeffs": [1, 2]})", R"({"coeffs": [[1]]})",
                           R"({"coeffs": [[1, 2, 3]]})", R"({"coeffs": [["a", 0]]})", R"([[0, 1]])"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(io::series_from_json(json::parse(text)), std::invalid_argument);
  }
  json nan_entry = {{"coeffs", json::array({json::array({NAN, 0.0})})}};
  CHECK_THROWS_AS(io::series_from_json(nan_entry), std::invalid_argument);
  json inf_entry = {{"coeffs", json::array({json::array({0.0, INFINITY})})}};
  CHECK_THROWS_AS(io::series_from_json(inf_entry), std::invalid_argument);
}

TEST_CASE("series file round trip") {
  const auto path = std::filesystem::temp_directory_path() / "gft_io_roundtrip.json";
  const TaylorSeries f{0.0, 1.0, Complex{0.25, -0.125}};
  io::write_series(path.string(), f);
  CHECK(io::read_series(path.string()) == f);
  for (const char* text : {"not json", R"({"coeffs": [[1e400, 0]]})"}) {
    std::ofstream(path) << text;
    CHECK_THROWS_AS(io::read_series(path.string()), std::invalid_argument);
  }
  std::filesystem::remove(path);
  CHECK_THROWS(io::read_series((std::filesystem::temp_directory_path() / "gft_missing_file.json").string()));
}

TEST_CASE("format_double round trips") {
  Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::ldexp(rng.uniform(-1.0, 1.0), rng.integer(-300, 300));
    CHECK(std::stod(io::format_double(v)) == v);
  }
  CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.theorem_id = "re-fprime";
  r.passed = true;
  r.worst_margin = 0.25;
  r.worst_point = {-0.5, 0.125};
  r.params = LParams(0.0, 1.5);
  r.members = 3;
  r.seed = 9;
  const json j = io::report_to_json(r);
  for (const char* key : {"theorem_id", "passed", "sharp", "worst_margin", "worst_point", "truncation_tail",
                          "tolerance", "grid", "params", "members", "worst_member", "seed"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["params"]["class"] == "L");
  CHECK(j["params"]["b"] == 1.5);
  CHECK(j["worst_point"][1] == 0.125);

  const std::string header = io::report_csv_header();
  const std::string row = io::report_csv_row(r);
  CHECK(header.rfind("theorem_id,passed,", 0) == 0);
  CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
  CHECK(row.rfind("re-fprime,true,", 0) == 0);
}

TEST_CASE("CSV writers") {
  std::ostringstream curve;
  io::write_curve_csv(curve, phi_boundary_curve(LParams(0.0, 1.5), 4));
  std::istringstream lines(curve.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "phi,re,im");
  std::getline(lines, line);
  CHECK(line.rfind("0,3", 0) == 0);

  std::ostringstream scan;
  io::write_conjecture_csv(scan, {ConjectureRow{2, 0, 3.0, 0.0, 0.5, 0.5, true}});
  CHECK(scan.str().rfind("k,member_id,alpha,beta,estimated_radius,closed_form_radius,holds\n2,0,3,0,0.5,0.5,true", 0) ==
        0);
}
