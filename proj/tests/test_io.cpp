#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>

#include "maxalg/errors.hpp"
#include "maxalg/io.hpp"
#include "maxalg/matrix.hpp"

using namespace maxalg;

namespace {

std::string error_of(const std::string& content) {
  try {
    parse_input_text(content, "t.txt");
  } catch (const input_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("plain text: one block is a matrix, several are a tuple") {
  ParsedInput one = parse_input_text("20 9\n7 1\n", "t.txt");
  REQUIRE(one.matrix.has_value());
  CHECK(*one.matrix == NonnegMatrix{{20, 9}, {7, 1}});
  CHECK_FALSE(one.tuple.has_value());

  ParsedInput two = parse_input_text("1 2\n3 4\n\n5 6\n7 8\n", "t.txt");
  REQUIRE(two.tuple.has_value());
  CHECK(two.tuple->arity() == 2);
  CHECK(two.tuple->mats[1] == NonnegMatrix{{5, 6}, {7, 8}});

  // Indentation and repeated blank lines are cosmetic.
  ParsedInput spaced = parse_input_text("\n\n  1.5  2\n\t0 4\n\n\n", "t.txt");
  REQUIRE(spaced.matrix.has_value());
  CHECK(*spaced.matrix == NonnegMatrix{{1.5, 2}, {0, 4}});
}

TEST_CASE("plain text errors carry origin, line and column") {
  CHECK(error_of("1 2\n3\n").find("t.txt:2:1") != std::string::npos);
  CHECK(error_of("1 2\n3\n").find("expected 2") != std::string::npos);
  CHECK(error_of("1 -2\n").find("t.txt:1:3") != std::string::npos);
  CHECK(error_of("1 -2\n").find("negative") != std::string::npos);
  CHECK(error_of("1 x\n").find("cannot parse 'x'") != std::string::npos);
  CHECK(error_of("1 1e999\n").find("cannot parse '1e999'") != std::string::npos);
  CHECK(error_of("1 nan\n").find("not finite") != std::string::npos);
  CHECK(error_of("").find("no matrix data") != std::string::npos);
}

TEST_CASE("json documents") {
  ParsedInput m = parse_input_text(R"({"matrix": [[1, 2], [3, 4]]})", "t.json");
  REQUIRE(m.matrix.has_value());
  CHECK(*m.matrix == NonnegMatrix{{1, 2}, {3, 4}});

  ParsedInput full = parse_input_text(
      R"({"matrices": [[[5, 2], [7, 4]], [[3, 4], [2, 8]]], "c": [2, 8], "C": [[1, 0], [0, 1]]})",
      "t.json");
  REQUIRE(full.tuple.has_value());
  CHECK(full.tuple->arity() == 2);
  REQUIRE(full.weights.has_value());
  CHECK((*full.weights)[1] == 8.0);
  REQUIRE(full.weight_matrix.has_value());
  CHECK(*full.weight_matrix == NonnegMatrix::identity(2));

  CHECK(error_of(R"({"matrix": [[1, -2]]})").find("negative entry") != std::string::npos);
  CHECK(error_of(R"({"matrix": [[1], [2, 3]]})").find("expected 1") != std::string::npos);
  CHECK(error_of(R"({"other": 1})").find("no \"matrix\"") != std::string::npos);
  CHECK(error_of("[1, 2]").find("must be an object") != std::string::npos);
  // Malformed JSON still reports a position.
  CHECK(error_of("{\n  \"matrix\": [[1,]\n}").find("t.txt:") != std::string::npos);
}

TEST_CASE("missing files are input errors") {
  CHECK_THROWS_AS(parse_input_file("/nonexistent/x.json"), input_error);
}

TEST_CASE("weight lists accept commas or spaces") {
  NonnegVector c = parse_weight_list("2,8");
  REQUIRE(c.size() == 2);
  CHECK(c[0] == 2.0);
  CHECK(c[1] == 8.0);
  CHECK(parse_weight_list("4 3")[1] == 3.0);
  CHECK_THROWS_AS(parse_weight_list(""), input_error);
  CHECK_THROWS_AS(parse_weight_list("1,-2"), input_error);
  CHECK_THROWS_AS(parse_weight_list("1,zz"), input_error);
}

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(20.0) == "20");
  CHECK(format_double(2.25) == "2.25");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(0.0) == "0");
  double third = 1.0 / 3.0;
  CHECK(std::strtod(format_double(third).c_str(), nullptr) == third);
}

TEST_CASE("json serialization shapes") {
  nlohmann::json iv = to_json(Interval::half_open_below(0, 5));
  CHECK(iv == nlohmann::json({{"lo", 0.0}, {"lo_closed", false}, {"hi", 5.0}, {"hi_closed", true}}));

  nlohmann::json s = to_json(IntervalSet({Interval::closed(1, 2)}));
  CHECK(s["kind"] == "interval_set");
  REQUIRE(s["intervals"].size() == 1);
  CHECK(s["intervals"][0]["lo"] == 1.0);

  nlohmann::json ps = to_json(make_point_set({{32}, {40}}));
  CHECK(ps == nlohmann::json({{"kind", "point_set"}, {"points", {{32.0}, {40.0}}}}));

  BoxRegion box{{Interval::closed(4, 5), Interval::closed(5, 7)}};
  nlohmann::json bx = to_json(box);
  CHECK(bx["kind"] == "box");
  CHECK(bx["coords"][1]["hi"] == 7.0);

  OracleReport r;
  r.claim = "demo";
  r.trials = 3;
  r.seed = 9;
  r.failure_count = 1;
  r.failures.push_back({"in", "exp", "obs"});
  nlohmann::json rj = to_json(r);
  CHECK(rj["claim"] == "demo");
  CHECK(rj["pass"] == false);
  CHECK(rj["failures"][0]["observed"] == "obs");
}

TEST_CASE("csv writers") {
  PointCloud cloud;
  cloud.points = {{1.5, 2.0}, {3.0, 4.25}};
  std::ostringstream os;
  write_cloud_csv(os, cloud);
  CHECK(os.str() == "x1,x2\n1.5,2\n3,4.25\n");

  std::ostringstream ps;
  write_point_set_csv(ps, make_point_set({{40.0}, {32.0}}));
  CHECK(ps.str() == "x1\n32\n40\n");

  std::ostringstream empty;
  write_cloud_csv(empty, PointCloud{});
  CHECK(empty.str() == "\n");
}
