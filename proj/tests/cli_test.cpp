// Copyright 2026 The seqcx Authors
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

#include "seqcx/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace seqcx::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(const RunConfig& cfg) {
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::string ReadFile(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> Split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto p = line.find(sep, start);
    parts.push_back(line.substr(start, p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return parts;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("seqcx_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(CliTest, GenerateExamples) {
  RunConfig cfg;
  cfg.command = Command::kGenerate;
  cfg.poly = "i^2";
  cfg.n = 6;
  EXPECT_EQ(Invoke(cfg).out, "011011\n");

  cfg.family = "pattern";
  cfg.k = 2;
  cfg.poly = "i";
  cfg.n = 8;
  EXPECT_EQ(Invoke(cfg).out, "00010010\n");

  cfg.n = 0;
  cfg.out = (dir_ / "empty.txt").string();
  EXPECT_EQ(Invoke(cfg).code, kExitOk);
  EXPECT_TRUE(std::filesystem::exists(cfg.out));
  EXPECT_EQ(std::filesystem::file_size(cfg.out), 0u);
}

TEST_F(CliTest, GenerateErrors) {
  RunConfig cfg;
  cfg.command = Command::kGenerate;
  cfg.n = 4;
  cfg.poly = "j^2";
  EXPECT_EQ(Invoke(cfg).code, kExitUsage);
  cfg.poly = "i";
  cfg.out = (dir_ / "missing" / "x.txt").string();
  EXPECT_EQ(Invoke(cfg).code, kExitUsage);
  cfg.out.clear();
  cfg.format = "csv";
  EXPECT_EQ(Invoke(cfg).code, kExitUsage);
}

TEST_F(CliTest, BitsRoundTripThroughExplicitFamily) {
  RunConfig gen;
  gen.command = Command::kGenerate;
  gen.family = "random";
  gen.seed = 77;
  gen.n = 300;
  gen.out = (dir_ / "r.txt").string();
  ASSERT_EQ(Invoke(gen).code, kExitOk);

  RunConfig analyze;
  analyze.command = Command::kAnalyze;
  analyze.family = "bits";
  analyze.input = gen.out;
  analyze.measure = "moc";
  const auto from_file = Invoke(analyze);
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;

  RunConfig direct = analyze;
  direct.family = "random";
  direct.seed = 77;
  direct.n = 300;
  EXPECT_EQ(Invoke(direct).out, from_file.out);

  analyze.n = 301;
  EXPECT_EQ(Invoke(analyze).code, kExitUsage);
}

TEST_F(CliTest, AnalyzeExamples) {
  RunConfig cfg;
  cfg.command = Command::kAnalyze;
  cfg.n = 8;
  cfg.measure = "moc";
  EXPECT_EQ(Invoke(cfg).out, "measure=moc N=8 value=3 witness=0,3,2\n");

  cfg.measure = "ec";
  cfg.n = 128;
  const auto ec = Invoke(cfg);
  ASSERT_EQ(ec.code, kExitOk);
  const auto pos = ec.out.find("value=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_LE(std::stoul(ec.out.substr(pos + 6)), 5u);
  EXPECT_NE(ec.out.find("annihilator=\""), std::string::npos);

  std::ofstream(dir_ / "zeros.txt") << "0000000000\n";
  RunConfig lc;
  lc.command = Command::kAnalyze;
  lc.family = "bits";
  lc.input = (dir_ / "zeros.txt").string();
  lc.measure = "lc";
  lc.n = 10;
  EXPECT_EQ(Invoke(lc).out, "measure=lc N=10 value=0\n");
}

TEST_F(CliTest, AnalyzeExploratoryMeasures) {
  RunConfig cfg;
  cfg.command = Command::kAnalyze;
  cfg.poly = "i^2";
  cfg.n = 4096;
  cfg.measure = "subword";
  cfg.block = 4;
  EXPECT_EQ(Invoke(cfg).out, "measure=subword N=4096 block=4 value=16\n");

  cfg.measure = "freq";
  cfg.block = 1;
  const auto f = Invoke(cfg);
  EXPECT_EQ(f.out.rfind("measure=freq N=4096 block=1 counts=0:", 0), 0u);

  cfg.family = "thue-morse";
  cfg.poly = "i";
  cfg.n = 64;
  cfg.measure = "corr";
  cfg.order = 2;
  const auto c = Invoke(cfg);
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_NE(c.out.find("order=2 max_lag=63 value="), std::string::npos);
}

TEST_F(CliTest, AnalyzeBudgetAndUsage) {
  RunConfig cfg;
  cfg.command = Command::kAnalyze;
  cfg.measure = "ec";
  cfg.n = 513;
  EXPECT_EQ(Invoke(cfg).code, kExitBudget);
  cfg.measure = "moc";
  cfg.n = kMaxMocN + 1;
  EXPECT_EQ(Invoke(cfg).code, kExitBudget);
  cfg.measure = "nope";
  cfg.n = 10;
  EXPECT_EQ(Invoke(cfg).code, kExitUsage);
  cfg.measure = "moc";
  cfg.n.reset();
  EXPECT_EQ(Invoke(cfg).code, kExitUsage);
}

TEST_F(CliTest, SweepMocTprime) {
  RunConfig cfg;
  cfg.command = Command::kSweep;
  cfg.poly = "i^2";
  cfg.nmax = 1000;
  cfg.out = (dir_ / "t.csv").string();
  ASSERT_EQ(Invoke(cfg).code, kExitOk);
  const auto lines = Lines(ReadFile(cfg.out));
  ASSERT_EQ(lines.size(), 1001u);
  EXPECT_EQ(lines[0], "N,value,bound,ratio");
  for (std::size_t N = 1; N <= 1000; ++N) {
    const auto f = Split(lines[N], ',');
    ASSERT_EQ(f.size(), 4u);
    EXPECT_EQ(std::stoul(f[0]), N);
    const double value = std::stod(f[1]);
    if (N >= 21) {
      ASSERT_FALSE(f[2].empty());
      EXPECT_GE(value, std::stod(f[2])) << N;
    } else {
      EXPECT_TRUE(f[2].empty());
    }
    EXPECT_NEAR(std::stod(f[3]), value / std::sqrt(double(N)), 1e-6);
  }
}

TEST_F(CliTest, SweepConstantAndLcDominatesMoc) {
  std::ofstream(dir_ / "zeros.txt") << "00000\n";
  RunConfig cfg;
  cfg.command = Command::kSweep;
  cfg.family = "bits";
  cfg.input = (dir_ / "zeros.txt").string();
  cfg.nmax = 5;
  const auto zeros = Lines(Invoke(cfg).out);
  ASSERT_EQ(zeros.size(), 6u);
  for (std::size_t i = 1; i < zeros.size(); ++i) {
    EXPECT_EQ(Split(zeros[i], ',')[1], "0");
  }

  RunConfig moc;
  moc.command = Command::kSweep;
  moc.poly = "i^2";
  moc.nmax = 500;
  RunConfig lc = moc;
  lc.measure = "lc";
  const auto m = Lines(Invoke(moc).out), l = Lines(Invoke(lc).out);
  ASSERT_EQ(m.size(), l.size());
  for (std::size_t i = 1; i < m.size(); ++i) {
    EXPECT_LE(std::stoul(Split(m[i], ',')[1]), std::stoul(Split(l[i], ',')[1]));
  }
}

TEST_F(CliTest, SweepIsDeterministic) {
  RunConfig cfg;
  cfg.command = Command::kSweep;
  cfg.family = "random";
  cfg.seed = 123;
  cfg.measure = "ec";
  cfg.nmax = 60;
  const auto a = Invoke(cfg), b = Invoke(cfg);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  cfg.seed = 124;
  EXPECT_NE(Invoke(cfg).out, a.out);
}

TEST_F(CliTest, SweepBudgetExceededWritesPartialFile) {
  RunConfig cfg;
  cfg.command = Command::kSweep;
  cfg.measure = "ec";
  cfg.nmax = 600;
  cfg.out = (dir_ / "partial.csv").string();
  const auto r = Invoke(cfg);
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_NE(r.err.find("id=BUDGET"), std::string::npos);
  EXPECT_EQ(Lines(ReadFile(cfg.out)).size(), 513u);

  cfg.nmax = 50;
  cfg.budget_secs = 1e-9;
  const auto timed = Invoke(cfg);
  EXPECT_EQ(timed.code, kExitBudget);
  EXPECT_EQ(Lines(ReadFile(cfg.out)).size(), 1u);
}

TEST_F(CliTest, VerifyExitStatus) {
  RunConfig cfg;
  cfg.command = Command::kVerify;
  cfg.lmax = 8;
  cfg.kmax = 4;
  cfg.n = 5000;
  const auto ok = Invoke(cfg);
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_NE(ok.out.find("id=SUMMARY"), std::string::npos);
  EXPECT_EQ(ok.out.find("status=FAIL"), std::string::npos);

  cfg.inject_mutation = true;
  const auto bad = Invoke(cfg);
  EXPECT_EQ(bad.code, kExitCheckFailure);
  EXPECT_NE(bad.out.find("status=FAIL"), std::string::npos);

  cfg.inject_mutation = false;
  cfg.budget_secs = 1e-9;
  EXPECT_EQ(Invoke(cfg).code, kExitBudget);
}

}  // namespace
}  // namespace seqcx::cli
