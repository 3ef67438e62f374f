// Copyright 2026 The cbpir Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "cli_runner.h"

namespace cbpir {
namespace {

using testing::RunCli;

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path TempDir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(CliTest, RatesTableOne) {
  const auto run = RunCli("rates --table 1");
  ASSERT_EQ(run.exit_code, 0);
  EXPECT_NE(run.out.find("table1-row1,32,32,31,100,50,50,1/128\n"),
            std::string::npos);
  EXPECT_NE(run.out.find("table1-row6,2305843009213693951,6,2,100,50,200,1/6\n"),
            std::string::npos);
}

TEST(CliTest, DemoRoundTrips) {
  for (const char* scheme : {"original", "cbcpir"}) {
    const auto run = RunCli(std::string("demo --preset toy16 --seed 4 --scheme ") +
                            scheme);
    ASSERT_EQ(run.exit_code, 0) << run.out;
    EXPECT_NE(run.out.find("match=1\n"), std::string::npos);
  }
  EXPECT_EQ(RunCli("demo --preset toy16 --m 1").exit_code, 0);
}

TEST(CliTest, AttackRecoversPlantedIndex) {
  const auto run = RunCli("attack --preset toy16 --seed 7");
  ASSERT_EQ(run.exit_code, 0) << run.out;
  EXPECT_NE(run.out.find("status=recovered\n"), std::string::npos);
  EXPECT_NE(run.out.find("planted_index=15\n"), std::string::npos) << run.out;
  EXPECT_NE(run.out.find("\nindex=15\n"), std::string::npos) << run.out;
}

TEST(CliTest, SubqueryContrast) {
  EXPECT_EQ(RunCli("subquery --preset toy16 --seed 3").exit_code, 0);
  EXPECT_EQ(RunCli("subquery --preset toy16 --seed 3 --scheme cbcpir").exit_code, 8);
}

TEST(CliTest, ErrorExitCodes) {
  auto run = RunCli("demo --preset nope");
  EXPECT_EQ(run.exit_code, 3);
  EXPECT_EQ(run.out.rfind("error: code=unknown_preset reason=", 0), 0u) << run.out;
  EXPECT_EQ(RunCli("rates --table 3").exit_code, 2);
  EXPECT_EQ(RunCli("frobnicate").exit_code, 2);
  run = RunCli("attack --preset table1-row3");
  EXPECT_EQ(run.exit_code, 5);
  EXPECT_NE(run.out.find("estimated cost 2^49.17"), std::string::npos) << run.out;
  EXPECT_EQ(RunCli("demo --preset toy16 --scheme cbcpir --m 1 --index 3").exit_code,
            4);

  const auto dir = TempDir("cbpir_cli_errors");
  {
    std::ofstream bad(dir / "vs.preset");
    bad << "q_base=2\nq_exp=4\ns=4\nv=4\nn=12\nk=6\nm=40\nL=5\n";
    std::ofstream kn(dir / "kn.preset");
    kn << "q_base=2\nq_exp=4\ns=4\nv=2\nn=6\nk=6\nm=40\nL=5\n";
    std::ofstream junk(dir / "junk.preset");
    junk << "q_base=two\n";
  }
  EXPECT_EQ(RunCli("demo --preset " + (dir / "vs.preset").string()).exit_code, 4);
  EXPECT_EQ(RunCli("demo --preset " + (dir / "kn.preset").string()).exit_code, 4);
  EXPECT_EQ(RunCli("demo --preset " + (dir / "junk.preset").string()).exit_code, 6);
  EXPECT_EQ(RunCli("attack --preset toy16 --query " + (dir / "missing").string())
                .exit_code,
            6);
  // Every error is exactly one line on stderr.
  const auto err = RunCli("rates --table 3");
  EXPECT_EQ(std::count(err.out.begin(), err.out.end(), '\n'), 1) << err.out;
}

TEST(CliTest, IdenticalArgumentsGiveIdenticalArtifacts) {
  const auto a = TempDir("cbpir_cli_det_a");
  const auto b = TempDir("cbpir_cli_det_b");
  for (const auto& dir : {a, b}) {
    ASSERT_EQ(RunCli("demo --preset toy16 --scheme cbcpir --seed 11 --dump-dir " +
                     dir.string() + " --out " + (dir / "demo.txt").string())
                  .exit_code,
              0);
    ASSERT_EQ(RunCli("attack --preset toy16 --seed 11 --workers 3 --out " +
                     (dir / "attack.txt").string())
                  .exit_code,
              0);
    ASSERT_EQ(RunCli("curves --figure 5 --t 1 --t inf --points 20 --out " +
                     (dir / "fig5.csv").string())
                  .exit_code,
              0);
  }
  for (const char* name : {"database.cbpr", "query.cbpr", "response.cbpr",
                           "demo.txt", "attack.txt", "fig5.csv"}) {
    const std::string x = ReadFile(a / name);
    EXPECT_FALSE(x.empty()) << name;
    EXPECT_EQ(x, ReadFile(b / name)) << name;
  }
  EXPECT_NE(ReadFile(a / "attack.txt").find("status=recovered"), std::string::npos);
}

TEST(CliTest, AttackOnDumpedQuery) {
  const auto dir = TempDir("cbpir_cli_query");
  ASSERT_EQ(RunCli("demo --preset toy16 --scheme cbcpir --seed 5 --dump-dir " +
                   dir.string())
                .exit_code,
            0);
  const auto run =
      RunCli("attack --preset toy16 --query " + (dir / "query.cbpr").string());
  EXPECT_EQ(run.exit_code, 0) << run.out;
  EXPECT_NE(run.out.find("status=recovered"), std::string::npos);
}

TEST(CliTest, Selftest) {
  const auto run = RunCli("selftest");
  EXPECT_EQ(run.exit_code, 0) << run.out;
  EXPECT_EQ(run.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace cbpir
