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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "seqcx/complexity.hpp"
#include "seqcx/sequences.hpp"
#include "seqcx/verification.hpp"

namespace seqcx::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}
  bool expired() const { return std::chrono::steady_clock::now() >= end_; }

 private:
  std::chrono::steady_clock::time_point end_;
};

// Writes to cfg.out when set, otherwise to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot write to " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

BitSeq read_bits_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.pop_back();
  }
  return BitSeq::FromString(text);
}

SequenceSpec spec_of(const RunConfig& cfg) {
  const IndexPolynomial poly = IndexPolynomial::Parse(cfg.poly);
  if (cfg.family == "thue-morse") return SequenceSpec::ThueMorse(poly);
  if (cfg.family == "pattern") return SequenceSpec::Pattern(cfg.k, poly);
  if (cfg.family == "bits") {
    if (cfg.input.empty()) throw UsageError("family=bits needs --input");
    return SequenceSpec::Explicit(read_bits_file(cfg.input), poly);
  }
  throw UsageError("unknown family: " + cfg.family);
}

std::size_t require_n(const RunConfig& cfg) {
  if (cfg.n) return *cfg.n;
  if (cfg.family == "bits" && !cfg.input.empty() && cfg.poly == "i") {
    return read_bits_file(cfg.input).size();
  }
  throw UsageError("--n is required");
}

// The lower bound that applies to M (and hence L) of this sequence at N.
std::optional<double> moc_bound(const RunConfig& cfg, std::size_t N) {
  const bool thue_morse =
      cfg.family == "thue-morse" || (cfg.family == "pattern" && cfg.k == 1);
  if (cfg.poly == "i^2") {
    if (thue_morse && N >= 21) return std::sqrt(2.0 * N / 5.0);
    if (cfg.family == "pattern" && cfg.k >= 2 && cfg.k <= 30 &&
        N >= (std::size_t{1} << (2 * cfg.k + 2))) {
      return std::sqrt(N / 8.0);
    }
  } else if (cfg.poly == "i" && thue_morse && N >= 4) {
    return N / 5.0 + 1.0;
  }
  return std::nullopt;
}

std::string witness_field(const MocResult& r) {
  if (!r.witness) return "-";
  return std::to_string(r.witness->first) + "," +
         std::to_string(r.witness->second) + "," +
         std::to_string(r.witness->window);
}

void check_format(const RunConfig& cfg) {
  if (cfg.format.empty()) return;
  const char* natural = "records";
  if (cfg.command == Command::kGenerate) natural = "bits";
  if (cfg.command == Command::kSweep) natural = "csv";
  if (cfg.format != natural) {
    throw UsageError("format " + cfg.format + " is not available here; use " +
                     natural);
  }
}

}  // namespace

BitSeq build_sequence(const RunConfig& cfg, std::size_t N) {
  if (cfg.family == "random") {
    if (cfg.poly != "i") throw UsageError("family=random takes no --poly");
    std::mt19937_64 engine(cfg.seed);
    BitSeq bits(N);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < N; ++i) {
      if ((i & 63) == 0) word = engine();
      if ((word >> (i & 63)) & 1u) bits.set(i, true);
    }
    return bits;
  }
  return prefix(spec_of(cfg), N);
}

int run_generate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const std::size_t N = require_n(cfg);
  if (N > kMaxGenerateN) throw UsageError("--n exceeds generate cap");
  const BitSeq bits = build_sequence(cfg, N);
  Sink sink(cfg.out, out);
  if (N > 0) *sink << bits.to_string() << '\n';
  return kExitOk;
}

int run_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::size_t N = require_n(cfg);
  if (N == 0) throw UsageError("--n must be positive");
  const std::string& m = cfg.measure;
  std::string head = "measure=" + m + " N=" + std::to_string(N);

  if ((m == "moc" || m == "lc") && N > kMaxMocN) {
    err << "id=BUDGET status=EXCEEDED locus=N>" << kMaxMocN << "\n";
    return kExitBudget;
  }
  if (m == "ec" && N > kMaxEcSearchN) {
    err << "id=BUDGET status=EXCEEDED locus=N>" << kMaxEcSearchN << "\n";
    return kExitBudget;
  }

  const BitSeq s = build_sequence(cfg, N);
  std::string record;
  if (m == "moc") {
    const MocResult r = moc_fast(s, N);
    record = head + " value=" + std::to_string(r.value) +
             " witness=" + witness_field(r);
  } else if (m == "lc") {
    record = head + " value=" + std::to_string(linear_complexity(s, N));
  } else if (m == "ec") {
    const EcResult r = expansion_complexity(s, N, cfg.dmax);
    record = head + " value=" + std::to_string(r.value);
    if (r.exceeds_dmax) {
      record += " status=EXCEEDS_DMAX";
    } else {
      record += " annihilator=\"" +
                (r.annihilator ? r.annihilator->to_string() : std::string("-")) +
                "\"";
    }
  } else if (m == "subword") {
    record = head + " block=" + std::to_string(cfg.block) + " value=" +
             std::to_string(subword_complexity(s, cfg.block));
  } else if (m == "freq") {
    const BlockFrequencies f = block_frequencies(s, cfg.block);
    record = head + " block=" + std::to_string(cfg.block) + " counts=";
    for (std::size_t b = 0; b < f.counts.size(); ++b) {
      if (b) record += ",";
      record += f.block_label(b) + ":" + std::to_string(f.counts[b]);
    }
  } else if (m == "corr") {
    const std::size_t lag = cfg.max_lag == 0 ? N - 1 : cfg.max_lag;
    head += " order=" + std::to_string(cfg.order) +
            " max_lag=" + std::to_string(lag);
    try {
      const CorrelationResult r = correlation_measure(s, N, cfg.order, lag);
      record = head + " value=" + std::to_string(r.value) + " lags=";
      for (std::size_t i = 0; i < r.lags.size(); ++i) {
        if (i) record += ",";
        record += std::to_string(r.lags[i]);
      }
      record += " window=" + std::to_string(r.window);
    } catch (const BudgetExceeded& e) {
      Sink sink(cfg.out, out);
      *sink << head << " value>=" << e.partial() << " status=PARTIAL\n";
      err << "id=BUDGET status=EXCEEDED locus=" << e.what() << "\n";
      return kExitBudget;
    }
  } else {
    throw UsageError("unknown measure: " + m);
  }
  Sink sink(cfg.out, out);
  *sink << record << '\n';
  return kExitOk;
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Deadline deadline(cfg.budget_secs);
  const std::string& m = cfg.measure;
  if (m != "moc" && m != "lc" && m != "ec") {
    throw UsageError("sweep supports measures moc, lc, ec");
  }
  if (cfg.nmin < 1 || cfg.nmax < cfg.nmin) throw UsageError("bad N range");

  const std::size_t cap = m == "ec" ? kMaxEcSearchN : kMaxMocN;
  const std::size_t hi = std::min(cfg.nmax, cap);
  bool over_budget = cfg.nmax > cap;

  Sink sink(cfg.out, out);
  *sink << "N,value,bound,ratio\n";
  if (hi < cfg.nmin) {
    err << "id=BUDGET status=EXCEEDED locus=N>" << cap << "\n";
    return kExitBudget;
  }
  const BitSeq s = build_sequence(cfg, hi);

  std::optional<ComplexityProfile> profile;
  if (m == "moc") profile = moc_profile(s, hi);
  if (m == "lc") profile = linear_profile(s, hi);

  std::size_t stopped_at = 0;
  for (std::size_t N = cfg.nmin; N <= hi; ++N) {
    if ((m == "ec" || (N & 1023) == 0) && deadline.expired()) {
      over_budget = true;
      stopped_at = N;
      break;
    }
    std::size_t value;
    std::optional<double> bound;
    if (profile) {
      value = profile->points[N - 1].second;
      bound = moc_bound(cfg, N);
    } else {
      value = expansion_complexity(s, N, cfg.dmax).value;
      bound = std::sqrt(2.0 * N);
    }
    *sink << N << ',' << value << ',' << (bound ? fixed(*bound) : "") << ','
          << fixed(value / std::sqrt(static_cast<double>(N))) << '\n';
  }
  if (over_budget) {
    err << "id=BUDGET status=EXCEEDED locus="
        << (stopped_at ? "N=" + std::to_string(stopped_at)
                       : "N>" + std::to_string(cap))
        << "\n";
    return kExitBudget;
  }
  return kExitOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Deadline deadline(cfg.budget_secs);
  SuiteOptions options;
  options.lmax = cfg.lmax;
  options.kmax = cfg.kmax;
  options.nmax = std::min(cfg.n.value_or(kMaxMocN), kMaxMocN);
  options.mutate = cfg.inject_mutation;
  if (options.lmax > 40 || options.kmax > 20) {
    throw UsageError("--lmax must be <= 40 and --kmax <= 20");
  }
  const SuiteReport report =
      run_verification_suite(options, [&] { return deadline.expired(); });
  Sink sink(cfg.out, out);
  for (const auto& line : report.records) *sink << line << '\n';
  *sink << "id=SUMMARY checks=" << report.checks
        << " failures=" << report.failures
        << (report.ok() ? " status=PASS" : " status=FAIL") << '\n';
  if (report.budget_exceeded) {
    err << "id=BUDGET status=EXCEEDED locus=verify\n";
    return kExitBudget;
  }
  if (report.failures) {
    err << report.failures << " check(s) failed\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    check_format(cfg);
    switch (cfg.command) {
      case Command::kGenerate: return run_generate(cfg, out, err);
      case Command::kAnalyze: return run_analyze(cfg, out, err);
      case Command::kSweep: return run_sweep(cfg, out, err);
      case Command::kVerify: return run_verify(cfg, out, err);
    }
  } catch (const BudgetExceeded& e) {
    err << "id=BUDGET status=EXCEEDED locus=" << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace seqcx::cli
