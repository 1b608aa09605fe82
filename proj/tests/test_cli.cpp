#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include "json.hpp"
#include <sstream>
#include <string>
#include <vector>

#include "triwell/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

// Runs the installed binary as a child process.
Result run(const std::string& args) {
  const fs::path err_file = fs::temp_directory_path() / "triwell_cli_stderr.txt";
  const std::string cmd = std::string(TRIWELL_CLI_PATH) + " " + args + " 2>" + err_file.string();
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  std::ifstream in(err_file);
  std::ostringstream err;
  err << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, err.str()};
}

// Runs the same entry point in process.
Result run_inline(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = triwell::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::string value_of(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  }
  return {};
}

}  // namespace

TEST_CASE("solve") {
  const Result r = run("solve --vbar0 25");
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"n", "parity", "ebar", "residual"});
  CHECK(rows[1][1] == "even");
  CHECK(rows[2][1] == "odd");
  CHECK(std::stod(rows[1][2]) < std::stod(rows[2][2]));
  CHECK(std::fabs(std::stod(rows[1][3])) <= 1e-10);

  CHECK(csv(run("--convention halfwidth2 solve --vbar0 25").out).size() == 6);
  CHECK(csv(run("solve --vbar0 0.01").out).size() == 2);
  CHECK(run("solve --vbar0 0.01").out == run_inline({"solve", "--vbar0", "0.01"}).out);
}

TEST_CASE("usage errors exit 2 and leave no output file") {
  const fs::path out = fs::temp_directory_path() / "triwell_cli_bad.csv";
  fs::remove(out);
  const Result r = run("--output " + out.string() + " solve --vbar0 -1");
  CHECK(r.code == 2);
  CHECK(!r.err.empty());
  CHECK(!fs::exists(out));
  CHECK(run("solve --vbar0 nan").code == 2);
  CHECK(run("--tol 1e-3 solve --vbar0 1").code == 2);
  CHECK(run("--tol 1e-16 solve --vbar0 1").code == 2);
  CHECK(run("--convention sideways solve --vbar0 1").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("output file") {
  const fs::path out = fs::temp_directory_path() / "triwell_cli_good.csv";
  fs::remove(out);
  const Result r = run("--output " + out.string() + " solve --vbar0 5");
  REQUIRE(r.code == 0);
  std::ifstream in(out);
  std::ostringstream s;
  s << in.rdbuf();
  CHECK(s.str() == run("solve --vbar0 5").out);
  fs::remove(out);
}

TEST_CASE("airy") {
  const Result r = run("airy --x 0");
  REQUIRE(r.code == 0);
  CHECK(std::stod(value_of(r.out, "ai")) == doctest::Approx(0.355028053887817239).epsilon(1e-15));
  CHECK(std::stod(value_of(r.out, "bi_prime")) == doctest::Approx(0.448288357353826357).epsilon(1e-15));
  CHECK(run("airy --x 1e9").code == 2);
  CHECK(run("airy --x nan").code == 2);
  CHECK(run("airy --x 50 --scaled").code == 0);
}

TEST_CASE("oracle") {
  const Result e = run("oracle --vbar0 5");
  REQUIRE(e.code == 0);
  CHECK(value_of(e.out, "count") == "1");
  const Result h = run("--convention halfwidth2 oracle --vbar0 5");
  REQUIRE(h.code == 0);
  CHECK(value_of(h.out, "count") == "2");
  CHECK(std::stod(value_of(h.out, "achieved_error_estimate")) < 1e-8);
  CHECK(run("oracle --vbar0 5 --grid-points 4000").code == 2);
}

TEST_CASE("wavefunction") {
  const Result g = run("wavefunction --vbar0 1 --state 0 --grid 1001");
  REQUIRE(g.code == 0);
  const auto rows = csv(g.out);
  REQUIRE(rows.size() == 1002);
  CHECK(rows[0] == std::vector<std::string>{"y", "psi"});
  for (std::size_t i = 1; i <= 500; ++i) {
    CHECK(rows[i][0] == "-" + rows[1002 - i][0]);
    CHECK(rows[i][1] == rows[1002 - i][1]);
  }
  CHECK(std::stod(rows[501][0]) == 0.0);

  const auto odd = csv(run("wavefunction --vbar0 10 --state 1").out);
  REQUIRE(odd.size() == 1002);
  CHECK(std::fabs(std::stod(odd[501][1])) <= 1e-9);

  const Result missing = run("wavefunction --vbar0 1 --state 1");
  CHECK(missing.code == 1);
  CHECK(missing.err.find("1 state available") != std::string::npos);
  CHECK(run("wavefunction --vbar0 1 --state 0 --grid 1").code == 2);
}

TEST_CASE("critical") {
  const Result r = run("critical");
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1][3] == "4.28");
  CHECK(rows[2][3] == "20.62");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][4] == "1");
    CHECK(rows[i][5] == "1");
    CHECK(std::stod(rows[i][2]) == doctest::Approx(std::stod(rows[i][1]) / 4.0).epsilon(1e-9));
  }
  CHECK(std::stod(rows[1][1]) == doctest::Approx(7.8373).epsilon(1e-4));
}

TEST_CASE("json-like output parses") {
  const Result r = run("--format json-like solve --vbar0 25");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["convention"] == "eq1");
  CHECK(j["states"].size() == 2);
  CHECK(j["states"][1]["parity"] == "odd");
}

TEST_CASE("outputs are deterministic") {
  for (const char* args : {"solve --vbar0 40", "--convention halfwidth2 solve --vbar0 3",
                           "wavefunction --vbar0 25 --state 1 --grid 301", "oracle --vbar0 10"}) {
    CAPTURE(args);
    CHECK(run(args).out == run(args).out);
  }
}
