#include "doctest.h"

#include "json.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless merged.
Run run(const std::string& args, const std::string& env = "", bool merge_stderr = false) {
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" LIEDEG_CLI "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  for (size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("liedeg_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  fs::path write(const std::string& name, const std::string& text) const {
    fs::path p = path / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }
};

const char* kR2cWitness = R"({"convention": "new-basis", "matrix": [["t","0","0"],["0","1","t"],["0","1","0"]]})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("hasse DOT matches the golden file and is reproducible") {
    std::string golden = read_file(fs::path(LIEDEG_GOLDEN_DIR) / "l3_hasse.dot");
    Run a = run("hasse --catalog dim3 --format dot");
    CHECK(a.status == 0);
    CHECK(a.out == golden);
    Run b = run("hasse --catalog dim3 --format dot");
    CHECK(a.out == b.out);

    TempDir dir;
    fs::path dot = dir.path / "l3.dot";
    CHECK(run("hasse --dot \"" + dot.string() + "\"").status == 0);
    CHECK(read_file(dot) == golden);
  }

  TEST_CASE("invariants as JSON") {
    Run r = run("invariants n3 --format json");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["center_dim"] == 1);
    CHECK(j["der_dim"] == 6);
    CHECK(j["betti_trivial"] == json::array({1, 2, 2, 1}));
  }

  TEST_CASE("contract and verify with a witness file") {
    TempDir dir;
    fs::path w = dir.write("w.json", kR2cWitness);
    Run r = run("contract --algebra r2+C --witness \"" + w.string() + "\" --format json");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["limit_exists"] == true);
    CHECK(j["limit"] == json::parse(R"({"dim":3,"brackets":[{"i":1,"j":2,"coeffs":{"3":"1"}}]})"));

    Run table = run("contract --algebra r2+C --witness \"" + w.string() + "\"");
    CHECK(table.status == 0);
    CHECK(table.out.find("algebra limit dim 3\n[e1,e2] = e3\n") != std::string::npos);

    CHECK(run("contract --algebra r2+C --witness \"" + w.string() + "\" --convention action").status == 1);
    CHECK(run("verify r2+C n3 --witness \"" + w.string() + "\"").status == 0);
    CHECK(run("verify r2+C r3 --witness \"" + w.string() + "\"").status == 1);
  }

  TEST_CASE("algebra files in the DSL and JSON") {
    TempDir dir;
    fs::path lie = dir.write("x.lie", "algebra x dim 3\n[e1,e2] = e3\n");
    Run r = run("invariants \"" + lie.string() + "\" --format json");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["orbit_dim"] == 3);
    fs::path bad = dir.write("bad.lie", "algebra bad dim 3\n[e1,e2] = e1\n[e2,e3] = e2\n[e1,e3] = -e3\n");
    CHECK(run("validate \"" + bad.string() + "\"").status == 1);
    fs::path js = dir.write("x.json", R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "1"}}]})");
    CHECK(run("validate \"" + js.string() + "\"").status == 0);
    fs::path broken = dir.write("broken.lie", "algebra x dim 2\n[e1,e3] = e2\n");
    Run e = run("validate \"" + broken.string() + "\"", "", true);
    CHECK(e.status == 2);
    CHECK(e.out.find("2:5") != std::string::npos);
  }

  TEST_CASE("obstruct and expectations") {
    CHECK(run("obstruct n3 r2+C --expect obstructed").status == 0);
    CHECK(run("obstruct n3 r2+C --expect consistent").status == 1);
    CHECK(run("obstruct sl2 n3 --expect consistent").status == 0);
    Run j = run("obstruct n3 r2+C --format json");
    REQUIRE(j.status == 0);
    CHECK(json::parse(j.out)["index"] == 2);
  }

  TEST_CASE("deform check") {
    TempDir dir;
    fs::path ok = dir.write("ok.json", R"({"base": {"dim": 3, "brackets": []},
        "terms": [{"dim": 3, "brackets": [{"i":1,"j":2,"coeffs":{"3":"1"}}]}]})");
    CHECK(run("deform check \"" + ok.string() + "\"").status == 0);
    fs::path bad = dir.write("bad.json", R"({"base": {"dim": 3, "brackets": [{"i":1,"j":2,"coeffs":{"3":"1"}}]},
        "terms": [{"dim": 3, "brackets": [{"i":2,"j":3,"coeffs":{"2":"1"}}]}]})");
    CHECK(run("deform check \"" + bad.string() + "\"").status == 1);
  }

  TEST_CASE("exit codes and limits") {
    CHECK(run("").status == 2);
    CHECK(run("invariants nope").status == 2);
    CHECK(run("invariants C4", "LIEDEG_MAX_DIM=3").status == 2);
    CHECK(run("invariants C4", "LIEDEG_MAX_DIM=4").status == 0);
    CHECK(run("rigidity sl2 --format json").status == 0);
    CHECK(run("catalog").status == 0);
  }

  TEST_CASE("output is deterministic across runs") {
    for (const char* args : {"invariants sl2+C --format json", "catalog --format json", "hasse --catalog dim2 --format json",
                             "rigidity r3 --format json"}) {
      CAPTURE(args);
      Run a = run(args);
      Run b = run(args);
      CHECK(a.status == 0);
      CHECK(a.out == b.out);
    }
  }
}
