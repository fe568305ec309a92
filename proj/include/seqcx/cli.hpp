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

#ifndef SEQCX_CLI_HPP_
#define SEQCX_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "seqcx/bitseq.hpp"

namespace seqcx::cli {

enum class Command { kGenerate, kAnalyze, kSweep, kVerify };

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailure = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

// Size caps enforced by every command.
inline constexpr std::size_t kMaxMocN = 100000;
inline constexpr std::size_t kMaxEcSearchN = 512;
inline constexpr std::size_t kMaxGenerateN = std::size_t{1} << 26;

struct RunConfig {
  Command command = Command::kGenerate;

  // Sequence selection. family: thue-morse | pattern | random | bits.
  std::string family = "thue-morse";
  unsigned k = 1;
  std::string poly = "i";
  std::string input;  // bits-text file for family=bits
  std::uint64_t seed = 0;

  // Sizes. analyze/generate use n; sweep uses [nmin, nmax].
  std::optional<std::size_t> n;
  std::size_t nmin = 1;
  std::size_t nmax = 1000;

  // moc | lc | ec | subword | freq | corr
  std::string measure = "moc";
  std::size_t block = 8;       // subword / freq block length
  unsigned order = 2;          // corr order k
  std::size_t max_lag = 0;     // corr; 0 means N - 1
  std::optional<std::size_t> dmax;  // ec search cap

  std::string out;  // empty: standard output
  // csv | records | bits; empty picks the command's natural format.
  std::string format;
  double budget_secs = 60.0;

  // verify
  unsigned lmax = 20;
  unsigned kmax = 8;
  bool inject_mutation = false;
};

// Materializes the first N terms of the configured sequence. Throws
// std::invalid_argument for a bad family or polynomial, std::runtime_error
// when an input file cannot be read.
BitSeq build_sequence(const RunConfig& cfg, std::size_t N);

// Each returns an ExitCode. Results go to cfg.out (or `out` when empty);
// diagnostics and warning records go to `err`.
int run_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Dispatches on cfg.command and maps exceptions to exit codes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace seqcx::cli

#endif  // SEQCX_CLI_HPP_
