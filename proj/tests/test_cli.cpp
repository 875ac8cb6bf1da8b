// End-to-end checks of the fhl binary: exit codes, exact CSV output, and
// byte-identical reports across job counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "fhl_cli_tests";
  fs::create_directories(dir);
  return dir;
}

CliResult run_cli(const std::string& args) {
  const fs::path dir = scratch_dir();
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string cmd =
      std::string(FHL_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("moments subcommand matches the documented rows") {
  const auto r = run_cli(R"(moments --measure '{"type":"power","c":1,"s":1}' --n 3)");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "n,moment");
  const double expected[] = {1.0, 0.5, 1.0 / 3.0, 0.25};
  for (int n = 0; n <= 3; ++n) {
    std::string line;
    REQUIRE(std::getline(lines, line));
    const auto comma = line.find(',');
    CHECK(line.substr(0, comma) == std::to_string(n));
    CHECK(std::stod(line.substr(comma + 1)) == doctest::Approx(expected[n]).epsilon(1e-14));
  }
}

TEST_CASE("opnorm subcommand on the rank-one point mass") {
  const auto r = run_cli(
      R"(opnorm --op hmu --measure '{"type":"atoms","atoms":[[0.0,1.0]]}' --theta 4 --alpha 0 --beta 1 --N 64)");
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("value=2") != std::string::npos);
}

TEST_CASE("config errors exit with code 2") {
  CHECK(run_cli(R"(moments --measure '{"type":"nope"}' --n 3)").exit_code == 2);
  CHECK(run_cli(R"(moments --measure '{"type":"power","c":1,"s":1}' --no-such-flag)").exit_code == 2);
  CHECK(run_cli("opnorm --op hmu --N 4").exit_code == 2);  // missing measure
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("numeric failures exit with code 3") {
  // (1-t)^{lambda-1} transform of power(1, 0.5) at lambda = 0.25 has infinite mass
  const auto r = run_cli(
      R"(scan-carleson --measure '{"type":"power","c":1,"s":0.5}' --lambda 0.25 --grid-N 8)");
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("numeric error") != std::string::npos);
}

TEST_CASE("apply reads and writes 're im' coefficient lines") {
  const fs::path dir = scratch_dir();
  const fs::path coeffs = dir / "coeffs.txt";
  {
    std::ofstream f(coeffs);
    f << "1 0\n";
  }
  const fs::path out = dir / "image.txt";
  const auto r = run_cli(R"(apply --op hmu --measure '{"type":"power","c":1,"s":1}' --theta 1 )"
                         " --alpha 0 --beta 0 --coeffs " +
                         coeffs.string() + " --N 3 --out " + out.string());
  CHECK(r.exit_code == 0);
  std::istringstream img(slurp(out));
  double re = 0.0, im = 0.0;
  img >> re >> im;
  CHECK(re == doctest::Approx(1.0).epsilon(1e-14));
  img >> re >> im;
  CHECK(re == doctest::Approx(0.5).epsilon(1e-14));  // 1/((1+1) sqrt(1!))
  img >> re >> im;
  CHECK(re == doctest::Approx(1.0 / (3.0 * std::sqrt(2.0))).epsilon(1e-13));
}

TEST_CASE("verify-lemmas passes on a sound triple") {
  const auto r = run_cli("verify-lemmas --theta 1 --alpha 0 --beta 0 --n 8");
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("all bounds hold") != std::string::npos);
}

TEST_CASE("json format embeds the config") {
  const auto r = run_cli(R"(moments --measure '{"type":"power","c":1,"s":1}' --n 2 --format json)");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"config\"") != std::string::npos);
  CHECK(r.out.find("--measure") != std::string::npos);
}

TEST_CASE("scan-threshold CSV is byte-identical across jobs") {
  const fs::path dir = scratch_dir();
  const fs::path a = dir / "scan_a.csv";
  const fs::path b = dir / "scan_b.csv";
  const std::string base =
      "scan-threshold --theta 1 --alpha 0 --beta 0.5 --grid-lambda 1.0,1.25 --grid-N 16,64";
  CHECK(run_cli(base + " --jobs 1 --out " + a.string()).exit_code == 0);
  CHECK(run_cli(base + " --jobs 8 --out " + b.string()).exit_code == 0);
  const std::string ca = slurp(a), cb = slurp(b);
  CHECK(ca == cb);
  CHECK(ca.rfind("series,parameter,N,value,ratio\n", 0) == 0);
}

TEST_CASE("remaining subcommands run end to end") {
  const auto carleson = run_cli(R"(carleson --measure '{"type":"atoms","atoms":[[0.5,1.0]]}' --s 1)");
  CHECK(carleson.exit_code == 0);
  CHECK(carleson.err.find("constant=2") != std::string::npos);
  CHECK(carleson.out.rfind("t,quotient\n", 0) == 0);

  const auto compact = run_cli(
      R"(compactness --measure '{"type":"power","c":1,"s":1.75}' --theta 1 --alpha 0 --beta 0.5)"
      " --grid-nkeep 4,16 --grid-w 0.9,0.99 --N-big 64 --N-witness 128");
  CHECK(compact.exit_code == 0);
  CHECK(compact.out.find("tail_norm") != std::string::npos);
  CHECK(compact.out.find("witness") != std::string::npos);
  CHECK(compact.out.find("profile") != std::string::npos);

  const auto hardy = run_cli("hardy-scan --model hardy --p 2 --grid-lambda 0.75,1 --grid-N 64,128");
  CHECK(hardy.exit_code == 0);
  CHECK(hardy.out.find("xp_norm") != std::string::npos);
}

TEST_CASE("FHL_DEFAULT_JOBS is honored") {
  const fs::path dir = scratch_dir();
  const fs::path a = dir / "env_jobs.csv";
  const std::string cmd = std::string("FHL_DEFAULT_JOBS=4 ") + FHL_CLI_PATH +
                          " scan-threshold --theta 1 --alpha 0 --beta 0 --grid-lambda 1.0"
                          " --grid-N 8,16 --out " +
                          a.string() + " > /dev/null 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  CHECK(slurp(a).rfind("series,", 0) == 0);
}
