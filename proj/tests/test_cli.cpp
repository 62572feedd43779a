#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using hltasep::cli::run_cli;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("hltasep_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::vector<std::string> lines(const fs::path& p) {
  std::ifstream f(p);
  std::vector<std::string> out;
  for (std::string l; std::getline(f, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("exact one-shock existence probability") {
  const auto dir = scratch("exact");
  const auto r = cli({"exact", "--out", dir.string(), "--set", "exact.family=one_shock_exist", "--set", "exact.M1=1",
                      "--set", "exact.M2=1", "--set", "exact.alpha=0.4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("present,0.648") != std::string::npos);
  const auto csv = lines(dir / "exact.csv");
  REQUIRE(!csv.empty());
  CHECK(csv[0].rfind("family,", 0) == 0);
  CHECK(fs::exists(dir / "exact.json"));
}

TEST_CASE("exact stationary probability with flag") {
  const auto r = cli({"exact", "--out", scratch("dehp").string(), "--set", "exact.family=dehp", "--set",
                      "exact.eta=100", "--set", "exact.alpha=3/4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("13/144") != std::string::npos);
  CHECK(r.out.find("true") != std::string::npos);
}

TEST_CASE("config errors exit with 2") {
  CHECK(cli({"exact", "--set", "exact.family=one_shock_exist", "--set", "exact.M1=1", "--set", "exact.M2=1",
             "--set", "exact.alpha=1.2"})
            .code == 2);
  CHECK(cli({"simulate", "--set", "simulate.replicas=0", "--set", "simulate.alpha=0.4", "--set",
             "simulate.times=1"})
            .code == 2);
  CHECK(cli({"verify", "--set", "verify.suite=unknown"}).code == 2);
  CHECK(cli({"simulate", "--set", "simulate.bogus=1"}).code == 2);
  CHECK(cli({"nosuchcommand"}).code == 2);
  CHECK(cli({"exact", "--set", "exact.family=one_shock_exist", "--set", "exact.M1=9", "--set", "exact.M2=9",
             "--set", "exact.alpha=3/4"})
            .code == 2);
}

TEST_CASE("simulate output: header, metadata, rows, reproducible") {
  const auto dir = scratch("sim");
  const std::vector<std::string> args{"simulate",  "--out", dir.string(), "--seed", "9", "--set",
                                      "simulate.model=eta", "--set", "simulate.M1=2", "--set", "simulate.M2=2",
                                      "--set", "simulate.alpha=0.4", "--set", "simulate.times=1,4",
                                      "--set", "simulate.replicas=50"};
  REQUIRE(cli(args).code == 0);
  const auto first = lines(dir / "simulate.csv");
  REQUIRE(cli(args).code == 0);
  CHECK(lines(dir / "simulate.csv") == first);
  CHECK(first[0] == "replica,t,observable,value");
  CHECK(first[1].rfind("# ", 0) == 0);
  bool has_seed = false;
  std::size_t rows = 0;
  for (const auto& l : first) {
    has_seed = has_seed || l == "# seed = 9";
    rows += l[0] != '#';
  }
  CHECK(has_seed);
  CHECK(rows == 1 + 50 * 2);
}

TEST_CASE("output directory from the environment") {
  const auto dir = scratch("env");
  setenv("HLTASEP_OUT_DIR", dir.string().c_str(), 1);
  const auto r = cli({"exact", "--set", "exact.family=one_shock_height", "--set", "exact.M1=1", "--set",
                      "exact.M2=1", "--set", "exact.alpha=0.4"});
  unsetenv("HLTASEP_OUT_DIR");
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "exact.csv"));
}

TEST_CASE("config file and sweep") {
  const auto dir = scratch("sweep");
  fs::create_directories(dir);
  std::ofstream(dir / "sweep.ini") << "[sweep]\ncommand = exact\n[exact]\nfamily = one_shock_exist\nM2 = 1\n"
                                      "alpha = 0.4\n[grid]\nM1 = 0,1\n";
  const auto r = cli({"sweep", "--config", (dir / "sweep.ini").string(), "--out", dir.string()});
  CHECK(r.code == 0);
  const auto csv = lines(dir / "sweep.csv");
  REQUIRE(!csv.empty());
  CHECK(csv[0].rfind("M1,family", 0) == 0);
  std::size_t rows = 0;
  for (const auto& l : csv) rows += l[0] != '#';
  CHECK(rows == 1 + 2 * 2);
}

TEST_CASE("verify hecke suite writes a report and passes") {
  const auto dir = scratch("verify");
  const auto r = cli({"verify", "--out", dir.string(), "--set", "verify.suite=hecke"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(fs::exists(dir / "verify_hecke.json"));
}
