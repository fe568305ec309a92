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

// seqcx: generate automatic sequences and their polynomial subsequences,
// measure their complexity and run the digit-identity / bound checks.
//
//   seqcx generate --family thue-morse --poly i^2 --n 64
//   seqcx analyze  --family pattern --k 2 --poly i^2 --n 4096 --measure moc
//   seqcx sweep    --family thue-morse --poly i^2 --nmax 100000 --out t.csv
//   seqcx verify   --lmax 20 --kmax 8

#include <iostream>

#include "CLI11.hpp"
#include "seqcx/cli.hpp"

namespace {

void add_sequence_flags(CLI::App* cmd, seqcx::cli::RunConfig& cfg) {
  cmd->add_option("--family", cfg.family,
                  "thue-morse | pattern | random | bits")
      ->check(CLI::IsMember({"thue-morse", "pattern", "random", "bits"}));
  cmd->add_option("--k", cfg.k, "pattern length for family=pattern")
      ->check(CLI::Range(1u, 64u));
  cmd->add_option("--poly", cfg.poly,
                  "index polynomial: i, i^d or c0,c1,...,cd");
  cmd->add_option("--input", cfg.input, "bits-text file for family=bits");
  cmd->add_option("--seed", cfg.seed, "seed for family=random");
  cmd->add_option("--out", cfg.out, "output path (default stdout)");
  cmd->add_option("--format", cfg.format, "csv | records | bits");
  cmd->add_option("--budget-secs", cfg.budget_secs, "wall clock budget")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  using seqcx::cli::Command;
  seqcx::cli::RunConfig cfg;
  CLI::App app{"Complexity of automatic sequences along polynomials"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "write a sequence prefix");
  add_sequence_flags(gen, cfg);
  gen->add_option("--n", cfg.n, "prefix length")->required();

  auto* analyze = app.add_subcommand("analyze", "measure one prefix");
  add_sequence_flags(analyze, cfg);
  analyze->add_option("--n", cfg.n, "prefix length");
  analyze->add_option("--measure", cfg.measure)
      ->check(CLI::IsMember({"moc", "lc", "ec", "subword", "freq", "corr"}));
  analyze->add_option("--block", cfg.block, "block length (subword, freq)");
  analyze->add_option("--order", cfg.order, "correlation order");
  analyze->add_option("--max-lag", cfg.max_lag, "largest correlation lag");
  analyze->add_option("--dmax", cfg.dmax, "expansion complexity degree cap");

  auto* sweep = app.add_subcommand("sweep", "profile a measure over N");
  add_sequence_flags(sweep, cfg);
  sweep->add_option("--nmin", cfg.nmin, "first N (default 1)");
  sweep->add_option("--nmax", cfg.nmax, "last N")->required();
  sweep->add_option("--measure", cfg.measure)
      ->check(CLI::IsMember({"moc", "lc", "ec"}));
  sweep->add_option("--dmax", cfg.dmax, "expansion complexity degree cap");

  auto* verify = app.add_subcommand("verify", "run the identity/bound suite");
  verify->add_option("--lmax", cfg.lmax, "largest l for TI/CONTRA");
  verify->add_option("--kmax", cfg.kmax, "largest k for pattern checks");
  verify->add_option("--n", cfg.n, "largest N for lower-bound checks");
  verify->add_option("--out", cfg.out, "output path (default stdout)");
  verify->add_option("--format", cfg.format, "records");
  verify->add_option("--budget-secs", cfg.budget_secs, "wall clock budget")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-mutation", cfg.inject_mutation,
                   "run broken identity variants (must fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return seqcx::cli::kExitUsage;
  }

  if (*gen) cfg.command = Command::kGenerate;
  if (*analyze) cfg.command = Command::kAnalyze;
  if (*sweep) cfg.command = Command::kSweep;
  if (*verify) cfg.command = Command::kVerify;
  return seqcx::cli::run(cfg, std::cout, std::cerr);
}
