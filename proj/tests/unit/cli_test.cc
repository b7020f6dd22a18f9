// Copyright 2026 The ccmhe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ccmhe/experiments/measurement_log.h"
#include "ccmhe/types.h"
#include "ccmhe_cli/commands.h"
#include "json.hpp"

namespace ccmhe::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::initializer_list<std::string> args) {
  std::vector<std::string> owned{"ccmhe"};
  owned.insert(owned.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : owned) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ccmhe_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int count_lines(const fs::path& p) {
  const std::string s = slurp(p);
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const fs::path p = dir / "config.json";
  std::ofstream(p) << text;
  return p;
}

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(cli({"--help"}).code, kSuccess);
  EXPECT_EQ(cli({}).code, kValidation);
  EXPECT_EQ(cli({"frobnicate"}).code, kValidation);
  EXPECT_EQ(cli({"estimate"}).code, kValidation);
  EXPECT_EQ(cli({"estimate", "x.csv", "--estimator", "ukf"}).code, kValidation);
  EXPECT_EQ(cli({"generate", "--seed", "banana"}).code, kValidation);
}

TEST(Cli, GenerateWritesLogsDeterministically) {
  const fs::path a = scratch("gen_a"), b = scratch("gen_b"), c = scratch("gen_c");
  ASSERT_EQ(cli({"generate", "--out", a.string()}).code, kSuccess);
  ASSERT_EQ(cli({"generate", "--out", b.string()}).code, kSuccess);
  ASSERT_EQ(cli({"generate", "--out", c.string(), "--seed", "7"}).code, kSuccess);
  for (const char* f : {"truth.csv", "clean.csv", "noisy.csv"}) {
    EXPECT_EQ(count_lines(a / f), 201) << f;
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
  EXPECT_EQ(count_lines(a / "scenarios" / "scenario_10.csv"), 201);
  EXPECT_EQ(slurp(a / "scenarios/scenario_03.csv"), slurp(b / "scenarios/scenario_03.csv"));
  EXPECT_NE(slurp(a / "scenarios/scenario_03.csv"), slurp(c / "scenarios/scenario_03.csv"));
  const Json meta = Json::parse(slurp(a / "generate.json"));
  EXPECT_EQ(meta["samples"], 200);
  EXPECT_EQ(meta["files"].size(), 13u);
  EXPECT_EQ(meta["config"]["horizon"], 30);
}

TEST(Cli, GenerateViolatingCrossesQuarterBend) {
  const fs::path dir = scratch("gen_violating");
  const fs::path cfg =
      write_config(dir, R"({"trajectory": {"mode": "violating"}})");
  ASSERT_EQ(cli({"generate", "--config", cfg.string(), "--out", dir.string()}).code,
            kSuccess);
  const auto truth = experiments::read_state_log(dir / "truth.csv");
  EXPECT_LT(truth.states.front().shape.theta, kPi / 2);
  EXPECT_GT(truth.states.back().shape.theta, kPi / 2);
}

TEST(Cli, EstimateBothOnCleanLog) {
  const fs::path dir = scratch("est_both");
  ASSERT_EQ(cli({"generate", "--out", dir.string()}).code, kSuccess);
  const CliRun r = cli({"estimate", (dir / "clean.csv").string(), "--truth",
                     (dir / "truth.csv").string(), "--out", dir.string()});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const Json doc = Json::parse(slurp(dir / "estimate.json"));
  EXPECT_LT(doc["metrics"]["srmse_mhe"].get<double>(), 1e-5);
  EXPECT_EQ(doc["metrics"]["eval_begin"], 29);
  EXPECT_EQ(doc["mhe"]["solve_count"], 170);
  EXPECT_EQ(doc["ekf"]["states"].size(), 200u);
  EXPECT_EQ(doc["config"]["dt"], 0.05);
  const std::string csv = slurp(dir / "estimate.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "t,gamma,beta,mhe_valid,mhe_x,mhe_y,mhe_z,mhe_theta,mhe_phi,"
            "ekf_x,ekf_y,ekf_z,ekf_theta,ekf_phi");
}

TEST(Cli, EstimateBoundaryCases) {
  const fs::path dir = scratch("est_edge");
  std::ofstream(dir / "one.csv") << "t,gamma,beta\n0,0.1,0.2\n";
  EXPECT_EQ(cli({"estimate", (dir / "one.csv").string(), "--estimator", "ekf",
                 "--out", dir.string()})
                .code,
            kSuccess);
  EXPECT_EQ(count_lines(dir / "estimate.csv"), 2);
  EXPECT_EQ(cli({"estimate", (dir / "one.csv").string(), "--estimator", "mhe",
                 "--out", dir.string()})
                .code,
            kValidation);
  EXPECT_EQ(cli({"estimate", (dir / "missing.csv").string()}).code, kIo);
  std::ofstream(dir / "bad.csv") << "t,gamma,beta\n0,0.1\n";
  const CliRun bad = cli({"estimate", (dir / "bad.csv").string(), "--out", dir.string()});
  EXPECT_EQ(bad.code, kValidation);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
}

TEST(Cli, EstimateDegreesLog) {
  const fs::path dir = scratch("est_deg");
  std::ofstream(dir / "deg.csv") << "t,gamma,beta\n0,0,60\n0.05,0,60\n";
  ASSERT_EQ(cli({"estimate", (dir / "deg.csv").string(), "--estimator", "ekf",
                 "--degrees", "--out", dir.string()})
                .code,
            kSuccess);
  const Json doc = Json::parse(slurp(dir / "estimate.json"));
  EXPECT_NEAR(doc["ekf"]["states"][1][3].get<double>(), kPi / 3, 1e-6);
}

TEST(Cli, MonteCarloTable) {
  const fs::path dir = scratch("mc");
  const fs::path cfg = write_config(
      dir, R"({"horizon": 10, "trajectory": {"samples": 60}, "threads": 2})");
  const CliRun r = cli({"montecarlo", "--config", cfg.string(), "--out", dir.string()});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(count_lines(dir / "montecarlo.csv"), 11);
  const Json doc = Json::parse(slurp(dir / "montecarlo.json"));
  EXPECT_EQ(doc["scenarios"].size(), 10u);
  EXPECT_EQ(doc["scenarios"][2]["sigma_beta"], -0.026);
}

TEST(Cli, MonteCarloFailedRowsGiveNumericExit) {
  const fs::path dir = scratch("mc_fail");
  const fs::path cfg = write_config(
      dir, R"({"horizon": 10, "trajectory": {"samples": 60},
              "montecarlo": {"scenarios": [{"sigma_beta": 0.01},
                                           {"sigma_beta": 1e308, "sigma_gamma": 1e308}]}})");
  const CliRun r = cli({"montecarlo", "--config", cfg.string(), "--out", dir.string()});
  EXPECT_EQ(r.code, kNumeric);
  EXPECT_EQ(count_lines(dir / "montecarlo.csv"), 3);
}

TEST(Cli, HorizonSweepTable) {
  const fs::path dir = scratch("sweep");
  const CliRun r = cli({"horizon-sweep", "--out", dir.string()});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const Json doc = Json::parse(slurp(dir / "horizon_sweep.json"));
  ASSERT_EQ(doc["horizons"].size(), 6u);
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(doc["horizons"][i]["solve_count"], 200 - 10 * (i + 1));
  }
  const fs::path cfg = write_config(dir, R"({"horizon_sweep": {"horizons": []}})");
  EXPECT_EQ(cli({"horizon-sweep", "--config", cfg.string(), "--out", dir.string()}).code,
            kValidation);
}

TEST(Cli, ConfigAndIoErrors) {
  const fs::path dir = scratch("errors");
  EXPECT_EQ(cli({"generate", "--config", (dir / "nope.json").string()}).code, kIo);
  const fs::path cfg = write_config(dir, R"({"robot_length": -1})");
  const CliRun r = cli({"generate", "--config", cfg.string(), "--out", dir.string()});
  EXPECT_EQ(r.code, kValidation);
  EXPECT_FALSE(r.err.empty());
  std::ofstream(dir / "blocker") << "x";
  EXPECT_EQ(cli({"generate", "--out", (dir / "blocker" / "sub").string()}).code, kIo);
}

}  // namespace
}  // namespace ccmhe::cli
