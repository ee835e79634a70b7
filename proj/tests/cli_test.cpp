// Drives the emoa-lab binary end to end.

#include "emoa/harness.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

int run_cli(const std::string& args) {
  const std::string cmd = std::string(EMOA_LAB_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream is(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("emoa_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST_F(Cli, RunWritesTrialAndSummaryCsv) {
  const auto out = dir_ / "trials.csv";
  ASSERT_EQ(run_cli("run --problem ojzj --n 10 --k 2 --strategy stochastic --runs 3 --seed 5 "
                    "--quiet --out " + out.string()),
            0);
  const auto trials = lines_of(out);
  ASSERT_EQ(trials.size(), 4U);
  EXPECT_EQ(trials[0], emoa::trials_csv_header);
  EXPECT_EQ(trials[1].rfind("ojzj,10,2,20,stochastic,5,0,", 0), 0U);
  EXPECT_EQ(trials[3].rfind("ojzj,10,2,20,stochastic,7,2,", 0), 0U);

  const auto summary = lines_of(dir_ / "trials.summary.csv");
  ASSERT_EQ(summary.size(), 2U);
  EXPECT_EQ(summary[0], emoa::summary_csv_header);
  EXPECT_EQ(summary[1].rfind("ojzj,10,2,20,stochastic,3,", 0), 0U);
}

TEST_F(Cli, ExplicitMuAndBudget) {
  const auto out = dir_ / "t.csv";
  ASSERT_EQ(run_cli("run --n 12 --k 3 --mu 9 --strategy deterministic --runs 1 --seed 0 "
                    "--budget 5 --quiet --no-timing --out " + out.string()),
            0);
  const auto trials = lines_of(out);
  ASSERT_EQ(trials.size(), 2U);
  EXPECT_EQ(trials[1], "ojzj,12,3,9,deterministic,0,0,5,false,0");
}

TEST_F(Cli, NoTimingRerunIsByteIdentical) {
  const std::string common =
      "run --n 10 --k 2 --strategy deterministic --runs 4 --seed 9 --quiet --no-timing --out ";
  ASSERT_EQ(run_cli(common + (dir_ / "a.csv").string()), 0);
  ASSERT_EQ(run_cli(common + (dir_ / "b.csv").string()), 0);
  EXPECT_EQ(slurp(dir_ / "a.csv"), slurp(dir_ / "b.csv"));
  EXPECT_EQ(slurp(dir_ / "a.summary.csv"), slurp(dir_ / "b.summary.csv"));
}

TEST_F(Cli, ConfigurationErrorsExitNonzero) {
  const auto out = (dir_ / "t.csv").string();
  EXPECT_NE(run_cli("run --n 10 --k 5 --strategy deterministic --runs 1 --seed 0 --out " + out), 0);
  EXPECT_NE(run_cli("run --n 10 --k 2 --strategy annealing --runs 1 --seed 0 --out " + out), 0);
  EXPECT_NE(run_cli("run --problem lotz --n 10 --k 2 --strategy stochastic --runs 1 --seed 0 "
                    "--out " + out),
            0);
  EXPECT_NE(run_cli("run --n 10 --k 2 --strategy stochastic --subset-fraction 1.5 --runs 1 "
                    "--seed 0 --out " + out),
            0);
  EXPECT_NE(run_cli("run --n 10 --k 2 --strategy stochastic --runs 0 --seed 0 --out " + out), 0);
  EXPECT_NE(run_cli("run --n 10 --k 2 --strategy stochastic --runs 1 --out " + out), 0);
  EXPECT_NE(run_cli(""), 0);
  EXPECT_FALSE(fs::exists(out));
}

TEST_F(Cli, IoErrorExitsNonzero) {
  const auto out = dir_ / "no" / "such" / "dir" / "t.csv";
  EXPECT_EQ(run_cli("run --n 10 --k 2 --strategy stochastic --runs 1 --seed 0 --out " +
                    out.string()),
            3);
}

TEST_F(Cli, Figure3SmallRun) {
  ASSERT_EQ(run_cli("figure3 --runs 2 --no-timing --out-dir " + (dir_ / "fig").string()), 0);
  const auto trials = lines_of(dir_ / "fig" / "trials.csv");
  EXPECT_EQ(trials.size(), 1U + 5 * 2 * 2);
  EXPECT_EQ(trials[0], emoa::trials_csv_header);
  const auto summary = lines_of(dir_ / "fig" / "summary.csv");
  ASSERT_EQ(summary.size(), 11U);
  EXPECT_EQ(summary[1].rfind("ojzj,10,2,20,deterministic,2,", 0), 0U);
  EXPECT_EQ(summary[10].rfind("ojzj,30,2,60,stochastic,2,", 0), 0U);
  EXPECT_NE(slurp(dir_ / "fig" / "figure3.dat").find("# yscale: log"), std::string::npos);
  EXPECT_NE(slurp(dir_ / "fig" / "figure3.svg").find("</svg>"), std::string::npos);
}

}  // namespace
