// Runs the peircelab executable end to end.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include "json.hpp"

#ifndef PEIRCELAB_CLI
#error "PEIRCELAB_CLI must name the command line binary"
#endif

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" PEIRCELAB_CLI "' " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("peircelab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

double entry(const Json& m, int k) { return m.at("data").at(k).at(0).get<double>(); }

TEST_F(Cli, RangeTripotentOfNilpotent) {
  const CliRun r = run("range-tripotent --element " + file("a.json", "[[0, 2], [0, 0]]"));
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  const Json& e = j.at("range_tripotent");
  EXPECT_NEAR(entry(e, 0), 0.0, 1e-14);
  EXPECT_NEAR(entry(e, 1), 1.0, 1e-14);
  EXPECT_NEAR(entry(e, 2), 0.0, 1e-14);
  EXPECT_NEAR(entry(e, 3), 0.0, 1e-14);
}

TEST_F(Cli, ProjectionApproximation) {
  const CliRun r = run("approx --kind projections --eps 0.25 --model jbstar:2 --element " +
                    file("a.json", "[[0.3, 0], [0, 0.9]]"));
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_LE(j.at("error").get<double>(), 0.25);
  EXPECT_EQ(j.at("combination").size(), 2u);
}

TEST_F(Cli, PeirceSpacesOfMatrixUnit) {
  const CliRun r = run("peirce --model cstar:2 --tripotent " + file("e.json", "[[1, 0], [0, 0]]"));
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("E2").at("dimension").get<int>(), 1);
  EXPECT_EQ(j.at("E1").at("dimension").get<int>(), 2);
  EXPECT_EQ(j.at("E0").at("dimension").get<int>(), 1);
}

TEST_F(Cli, SpectralCommandsAndOutFile) {
  const std::string a = file("a.json", "[[3, 0], [0, 1]]");
  for (const char* cmd : {"spectrum", "polar", "ginv"}) {
    const CliRun r = run(std::string(cmd) + " --element " + a);
    EXPECT_EQ(r.code, 0) << cmd;
    EXPECT_NO_THROW(Json::parse(r.out)) << cmd;
  }
  const std::string out = (dir_ / "spec.json").string();
  ASSERT_EQ(run("spectrum --element " + a + " --out " + out).code, 0);
  std::ifstream f(out);
  const Json j = Json::parse(f);
  EXPECT_EQ(j.at("values").size(), 2u);
}

TEST_F(Cli, AnnihilatorAndWitness) {
  const std::string x = file("x.json", "[[1, 0], [0, 0]]");
  const CliRun a = run("annihilator --elements " + x);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(Json::parse(a.out).at("annihilator").at("dimension").get<int>(), 1);

  const CliRun w = run("witness --kind wor --element " + file("n.json", "[[0, 1], [0, 0]]"));
  ASSERT_EQ(w.code, 0);
  EXPECT_TRUE(Json::parse(w.out).at("verified").get<bool>());

  const CliRun p = run("witness --kind pedersen --case Rickart --model cstar:2 --element " + x +
                    " --family " + file("c.json", "[[0, 0], [0, 1]]"));
  ASSERT_EQ(p.code, 0);
  EXPECT_NEAR(entry(Json::parse(p.out).at("witness"), 0), 1.0, 1e-12);
}

TEST_F(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("range-tripotent --element " + (dir_ / "missing.json").string()).code, 2);
  EXPECT_EQ(run("peirce --tripotent " + file("t.json", "[[2, 0], [0, 0]]")).code, 2);
  EXPECT_EQ(run("spectrum --model cstar:3 --element " + file("a.json", "[[1, 0], [0, 1]]")).code, 2);
  EXPECT_EQ(run("approx --kind projections --eps -1 --element " + file("b.json", "[[1, 0], [0, 1]]")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify --config " + file("c.json", R"([{"name": "nope"}])")).code, 2);
}

TEST_F(Cli, VerifyExitCodes) {
  const std::string ok = file("ok.json", R"([{"name": "peirce-rules", "dims": [2], "trials": 3, "seed": 5}])");
  const CliRun pass = run("verify --config " + ok);
  EXPECT_EQ(pass.code, 0);
  EXPECT_TRUE(Json::parse(pass.out).at("pass").get<bool>());

  const std::string bad =
      file("bad.json", R"([{"name": "ternary-identity", "dims": [3], "trials": 3, "tol": 1e-300}])");
  EXPECT_EQ(run("verify --config " + bad).code, 1);
}

TEST_F(Cli, VerifyIsDeterministic) {
  const std::string cfg = file("c.json", R"([{"name": "wor-witness", "dims": [2, 3], "trials": 4},
                                            {"name": "peirce-automorphism", "dims": [2], "trials": 4}])");
  const CliRun a = run("verify --seed 42 --config " + cfg);
  const CliRun b = run("verify --seed 42 --threads 3 --config " + cfg);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, SeedFallsBackToEnvironment) {
  const std::string cfg = file("c.json", R"([{"name": "jordan-identity", "dims": [2], "trials": 2}])");
  const Json env = Json::parse(run("verify --config " + cfg, "PEIRCELAB_SEED=77").out);
  const Json flag = Json::parse(run("verify --seed 77 --config " + cfg).out);
  EXPECT_EQ(env, flag);
  EXPECT_EQ(run("verify --config " + cfg, "PEIRCELAB_SEED=abc").code, 2);
}

TEST_F(Cli, ReplayMatchesSuite) {
  const CliRun r = run("replay --property peirce-rules --model-kind rect --dim 3 --trial 2 --seed 11");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j.at("pass").get<bool>());
}

TEST_F(Cli, ListsRegistry) {
  const CliRun r = run("list");
  ASSERT_EQ(r.code, 0);
  EXPECT_GE(Json::parse(r.out).size(), 25u);
}

}  // namespace
