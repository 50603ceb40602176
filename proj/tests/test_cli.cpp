#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
  const char* env = std::getenv("QBOLTZ_CLI");
  REQUIRE_MESSAGE(env != nullptr, "QBOLTZ_CLI must point at the qboltz binary");
  return env;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("qboltz_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

int run(const std::string& args) {
  const std::string command = cli_path() + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("gen is byte-deterministic for a fixed seed") {
  TempDir tmp;
  const std::string a = (tmp.path / "a.model").string();
  const std::string b = (tmp.path / "b.model").string();
  CHECK(run("gen --kind classical --n 5 --seed 11 --scale-h 1 --scale-w 0.5 "
            "--scale-v 0.25 --out " + a) == 0);
  CHECK(run("gen --kind classical --n 5 --seed 11 --scale-h 1 --scale-w 0.5 "
            "--scale-v 0.25 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("classical 5", 0) == 0);
}

TEST_CASE("gen plus compare reproduces byte-identical reports") {
  TempDir tmp;
  const std::string model = (tmp.path / "m.model").string();
  CHECK(run("gen --kind classical --n 6 --seed 3 --scale-h 1 --scale-w 0.1 "
            "--scale-v 0.1 --out " + model) == 0);
  const std::string r1 = (tmp.path / "r1.csv").string();
  const std::string r2 = (tmp.path / "r2.csv").string();
  CHECK(run("compare --model " + model + " --out " + r1) == 0);
  CHECK(run("compare --model " + model + " --out " + r2) == 0);
  CHECK(slurp(r1) == slurp(r2));
  CHECK(slurp(r1).find("site,axis,exact,eproj,mproj,abs_error") !=
        std::string::npos);
}

TEST_CASE("exact and meanfield run on a quantum model") {
  TempDir tmp;
  const std::string model = (tmp.path / "q.model").string();
  CHECK(run("gen --kind quantum --n 2 --seed 5 --scale-h 1 --scale-w 0.3 "
            "--scale-v 0 --out " + model) == 0);
  const std::string exact = (tmp.path / "exact.csv").string();
  CHECK(run("exact --model " + model + " --out " + exact) == 0);
  CHECK(slurp(exact).find("# psi ") != std::string::npos);
  const std::string mf = (tmp.path / "mf.doc").string();
  CHECK(run("meanfield --model " + model + " --format doc --out " + mf) == 0);
  CHECK(slurp(mf).rfind("qboltz-report meanfield", 0) == 0);
}

TEST_CASE("sweep emits one block per grid point in order") {
  TempDir tmp;
  const std::string out = (tmp.path / "sweep.csv").string();
  CHECK(run("sweep --kind classical --n 4 --seed 2 --scale-h 1 "
            "--grid 0.05,0.1,0.2 --out " + out) == 0);
  const std::string text = slurp(out);
  CHECK(text.find("# points 3") != std::string::npos);
  const auto p1 = text.find("\n0.050000000000000003,");
  const auto p2 = text.find("\n0.10000000000000001,");
  const auto p3 = text.find("\n0.20000000000000001,");
  CHECK(p1 != std::string::npos);
  CHECK(p2 != std::string::npos);
  CHECK(p3 != std::string::npos);
  CHECK(p1 < p2);
  CHECK(p2 < p3);
}

TEST_CASE("exit codes distinguish usage, validation and numerical failures") {
  TempDir tmp;
  // usage errors
  CHECK(run("no-such-command") == 1);
  CHECK(run("gen --kind classical") == 1);  // missing required flags

  // validation errors
  const std::string bad = (tmp.path / "bad.model").string();
  std::ofstream(bad) << "classical 2\nw 1 1 0.5\n";
  CHECK(run("exact --model " + bad) == 2);
  CHECK(run("gen --kind classical --n 25 --seed 1") == 2);  // cap exceeded
  CHECK(run("gen --kind sideways --n 2 --seed 1") == 1);    // bad flag value
  CHECK(run("exact --model " + (tmp.path / "missing.model").string()) == 2);

  // numerical failure: finite parameters whose energy sum overflows
  const std::string hot = (tmp.path / "hot.model").string();
  std::ofstream(hot) << "classical 2\nh 1 1e308\nh 2 1e308\n";
  CHECK(run("exact --model " + hot) == 3);

  // non-convergence is not an error
  const std::string osc = (tmp.path / "osc.model").string();
  std::ofstream(osc) << "classical 2\nh 1 2\nh 2 2\nw 1 2 -5\n";
  CHECK(run("meanfield --model " + osc + " --damping 1 --max-iter 50") == 0);
}
