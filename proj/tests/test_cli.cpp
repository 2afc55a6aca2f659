// End-to-end checks of the maxrange binary. The path comes from the
// MAXRANGE_BIN environment variable set by the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
};

std::string binary() {
  const char* bin = std::getenv("MAXRANGE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "MAXRANGE_BIN must point at the maxrange binary");
  return bin;
}

RunResult run(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path work_dir() {
  fs::path dir = fs::temp_directory_path() / "maxrange_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  fs::path p = work_dir() / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

nlohmann::json run_json(const std::string& args, int expect_code = 0) {
  RunResult r = run(args);
  REQUIRE_MESSAGE(r.code == expect_code, args);
  return nlohmann::json::parse(r.out);
}

const std::string kTwoByTwo = "20 9\n7 1\n";
const std::string kBlockDiag = R"({"matrix": [[5,0,0,0],[0,8,0,0],[0,0,10,0],[0,0,0,12]]})";
const std::string kPermPair = R"({"matrices": [[[5,2],[7,4]], [[3,4],[2,8]]], "c": [2,8]})";
const std::string kDiagTuple = "2 0 0\n0 4 0\n0 0 5\n\n7 0 0\n0 3 0\n0 0 5\n";

}  // namespace

TEST_CASE("wmax and wmax-k") {
  std::string file = write_file("two.txt", kTwoByTwo);
  nlohmann::json doc = run_json("wmax " + file);
  CHECK(doc["kind"] == "interval_set");
  REQUIRE(doc["intervals"].size() == 1);
  CHECK(doc["intervals"][0] ==
        nlohmann::json({{"lo", 1.0}, {"lo_closed", true}, {"hi", 20.0}, {"hi_closed", true}}));

  nlohmann::json k2 = run_json("wmax-k " + file + " --k 2");
  CHECK(k2["intervals"][0]["lo"] == 20.0);
  CHECK(k2["intervals"][0]["hi"] == 20.0);
}

TEST_CASE("lambda-k json and csv") {
  std::string file = write_file("block.json", kBlockDiag);
  nlohmann::json doc = run_json("lambda-k " + file + " --k 2");
  REQUIRE(doc["intervals"].size() == 1);
  CHECK(doc["intervals"][0]["lo"] == 8.0);
  CHECK(doc["intervals"][0]["hi"] == 10.0);

  RunResult csv = run("lambda-k " + file + " --k 2 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out == "lo,lo_closed,hi,hi_closed\n8,true,10,true\n");

  // Empty range: exit still 0, no interval rows.
  nlohmann::json empty = run_json("lambda-k " + write_file("two.txt", kTwoByTwo) + " --k 2");
  CHECK(empty["intervals"].empty());
}

TEST_CASE("radius and eig scalars") {
  std::string file = write_file("block.json", kBlockDiag);
  nlohmann::json r = run_json("radius " + file + " --k 2");
  CHECK(r == nlohmann::json({{"kind", "scalar"}, {"value", 10.0}}));

  std::string toep = write_file("toep.txt", "3 4 2 0\n5 3 4 2\n2 5 3 4\n0 2 5 3\n");
  nlohmann::json bottom = run_json("radius " + toep + " --k 3");
  CHECK(bottom["value"].is_null());

  std::string cyc = write_file("cyc.txt", "0 8\n2 0\n");
  nlohmann::json eig = run_json("eig " + cyc);
  CHECK(eig == nlohmann::json({{"kind", "scalar"}, {"value", 4.0}}));
}

TEST_CASE("weighted ranges") {
  std::string a1 = write_file("a1.txt", "5 2\n7 4\n");
  nlohmann::json cr = run_json("c-range " + a1 + " --c 2,8");
  CHECK(cr == nlohmann::json({{"kind", "point_set"}, {"points", {{32.0}, {40.0}}}}));

  RunResult csv = run("c-range " + a1 + " --c 2,8 --format csv");
  CHECK(csv.out == "x1\n32\n40\n# cardinality=2\n");

  nlohmann::json hull = run_json("hull " + a1 + " --c 2,8");
  CHECK(hull["intervals"][0]["lo"] == 32.0);
  CHECK(hull["intervals"][0]["hi"] == 40.0);

  std::string cidm = write_file("cid.txt", "1 0\n0 1\n");
  nlohmann::json bigc = run_json("C-range " + a1 + " --C-file " + cidm);
  CHECK(bigc["points"] == nlohmann::json::array({{5.0}}));

  // Weights can also come from the input document itself.
  std::string pair = write_file("pair.json", kPermPair);
  nlohmann::json joint = run_json("joint-c " + pair);
  CHECK(joint["points"] == nlohmann::json::array({{32.0, 64.0}, {40.0, 24.0}}));
}

TEST_CASE("joint subcommands") {
  std::string tup = write_file("tuple.txt", kDiagTuple);
  nlohmann::json exact = run_json("joint-exact " + tup);
  CHECK(exact["points"] == nlohmann::json::array({{5.0, 7.0}}));

  nlohmann::json box = run_json("joint-box " + tup + " --k 2");
  CHECK(box["kind"] == "box");
  REQUIRE(box["coords"].size() == 2);
  CHECK(box["coords"][0]["lo"] == 4.0);
  CHECK(box["coords"][1]["hi"] == 7.0);
}

TEST_CASE("joint-cloud writes a reproducible csv") {
  std::string tup = write_file("tuple.txt", kDiagTuple);
  std::string out = (work_dir() / "cloud_a.csv").string();
  nlohmann::json doc =
      run_json("joint-cloud " + tup + " --k 2 --samples 30 --seed 3 --out " + out);
  CHECK(doc["kind"] == "cloud_csv_path");
  CHECK(doc["path"] == out);
  CHECK(doc["samples"] == 30);
  CHECK(doc["seed"] == 3);
  CHECK(doc["proven_empty"] == false);

  std::string first = slurp(out);
  CHECK(first.substr(0, 6) == "x1,x2\n");
  CHECK(std::count(first.begin(), first.end(), '\n') == 31);

  run_json("joint-cloud " + tup + " --k 2 --samples 30 --seed 3 --out " + out);
  CHECK(slurp(out) == first);

  RunResult csv = run("joint-cloud " + tup + " --k 2 --samples 30 --seed 3 --format csv --out " +
                      (work_dir() / "cloud_b.csv").string());
  CHECK(csv.code == 0);
  CHECK(csv.out == first);
  CHECK(slurp((work_dir() / "cloud_b.csv").string()) == first);
}

TEST_CASE("verify runs the claim suite") {
  RunResult a = run("verify --seed 0 --trials 2");
  CHECK(a.code == 0);
  RunResult b = run("verify --seed 0 --trials 2");
  CHECK(a.out == b.out);
  nlohmann::json doc = nlohmann::json::parse(a.out);
  CHECK(doc["kind"] == "report");
  CHECK(doc["all_pass"] == true);
  CHECK(doc["reports"].size() >= 40);

  RunResult lines = run("verify --seed 0 --trials 2 --format csv");
  CHECK(lines.code == 0);
  CHECK(lines.out.substr(0, 5) == "pass ");
}

TEST_CASE("exit codes") {
  CHECK(run("wmax /nonexistent/in.txt").code == 2);
  CHECK(run("wmax " + write_file("bad.txt", "1 -2\n")).code == 2);
  CHECK(run("frobnicate x").code == 2);
  std::string two = write_file("two.txt", kTwoByTwo);
  CHECK(run("wmax-k " + two).code == 2);          // missing required --k
  CHECK(run("wmax-k " + two + " --k 0").code == 2);
  CHECK(run("c-range " + two).code == 2);  // no weights anywhere

  std::ostringstream big;
  for (int i = 0; i < 17; ++i) {
    for (int j = 0; j < 17; ++j) big << (i == j ? "1" : "0") << (j + 1 < 17 ? " " : "");
    big << "\n";
  }
  CHECK(run("lambda-k " + write_file("big.txt", big.str()) + " --k 2").code == 3);
}
