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

#ifndef SEQCX_COMPLEXITY_HPP_
#define SEQCX_COMPLEXITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seqcx/bitseq.hpp"
#include "seqcx/f2algebra.hpp"

namespace seqcx {

// Two occurrences of the same length-`window` block whose successor bits
// differ, proving that no feedback function of order `window` exists.
struct MocWitness {
  std::size_t first = 0;   // start of the earlier occurrence
  std::size_t second = 0;  // start of the later occurrence
  std::size_t window = 0;
  friend bool operator==(const MocWitness&, const MocWitness&) = default;
};

// Nth maximum order complexity. The witness is absent exactly when the
// constant-prefix rule decided the value.
struct MocResult {
  std::size_t value = 0;
  std::optional<MocWitness> witness;
};

enum class Measure { kMoc, kLinear, kExpansion, kSubword, kCorrelation };
std::string to_string(Measure m);

// (N, value) points with strictly increasing N.
struct ComplexityProfile {
  Measure measure;
  std::vector<std::pair<std::size_t, std::size_t>> points;
};

struct EcResult {
  // When exceeds_dmax is set no annihilator of degree <= dmax exists and
  // value holds dmax + 1, a lower bound.
  std::size_t value = 0;
  std::optional<F2Bivariate> annihilator;
  bool exceeds_dmax = false;
};

// Raised when a computation would exceed its operation budget. Carries the
// best value seen before stopping.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::size_t partial)
      : std::runtime_error(what), partial_(partial) {}
  std::size_t partial() const { return partial_; }

 private:
  std::size_t partial_;
};

// --- maximum order complexity -------------------------------------------

// Brute force: for M = 0, 1, ... build the window -> successor map over the
// first N bits and return the first M >= 1 where it is single valued.
// Throws std::invalid_argument for N == 0, std::length_error if N > size.
MocResult moc_naive(const BitSeq& s, std::size_t N);

// Same value via an online suffix automaton in O(N).
MocResult moc_fast(const BitSeq& s, std::size_t N);

// M(S, N) for every 1 <= N <= Nmax in one pass.
ComplexityProfile moc_profile(const BitSeq& s, std::size_t Nmax);

// True iff the witness is consistent with `result` over the first N bits.
bool moc_witness_valid(const BitSeq& s, std::size_t N, const MocResult& result);

// Incremental maximum order complexity. Append bits one at a time; value()
// is M of everything appended so far.
class MocTracker {
 public:
  MocTracker();
  void append(bool bit);
  std::size_t length() const { return length_; }
  MocResult result() const;
  std::size_t value() const;

 private:
  struct State {
    std::size_t len;
    int link;
    int next[2];
    std::size_t first_end;  // end position of the first occurrence
  };

  std::vector<State> states_;
  int last_ = 0;
  std::size_t length_ = 0;
  bool first_bit_ = false;
  std::size_t constant_run_ = 0;
  bool last_bit_ = false;
  // Longest block w with both w0 and w1 present; -1 if none yet.
  long longest_ambiguous_ = -1;
  MocWitness witness_;
};

// --- linear complexity ---------------------------------------------------

// Berlekamp-Massey over F2. Throws std::length_error if N > size.
std::size_t linear_complexity(const BitSeq& s, std::size_t N);
ComplexityProfile linear_profile(const BitSeq& s, std::size_t Nmax);

// --- expansion complexity ------------------------------------------------

// smallest r with r * r >= 2N
std::size_t ceil_sqrt_2n(std::size_t N);

// Least total degree d of a nonzero h with h(x, G(x)) = 0 mod x^N, searched
// for d <= dmax (default ceil(sqrt(2N)) + 1). Throws std::invalid_argument if
// dmax < 1 or N == 0, std::length_error if N > size.
EcResult expansion_complexity(const BitSeq& s, std::size_t N,
                              std::optional<std::size_t> dmax = std::nullopt);

// --- exploratory measures ------------------------------------------------

// Number of distinct length-n factors of s.
std::size_t subword_complexity(const BitSeq& s, std::size_t n);

// counts[b] is the number of positions where the length-n block with binary
// value b (first bit most significant) starts. n must be in [1, 16].
struct BlockFrequencies {
  std::size_t n = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total() const;
  std::string block_label(std::size_t b) const;
};
BlockFrequencies block_frequencies(const BitSeq& s, std::size_t n);

struct CorrelationResult {
  std::size_t value = 0;
  std::vector<std::size_t> lags;  // maximizing d_1 < ... < d_k
  std::size_t window = 0;         // maximizing M
  std::uint64_t operations = 0;   // summands evaluated
};

// Order-k correlation measure of the first N bits:
//   max over M and 0 <= d_1 < ... < d_k <= max_lag with M + d_k <= N of
//   |sum_{n < M} (-1)^(s_{n+d_1} + ... + s_{n+d_k})|.
// Requires 1 <= k <= 4 and N <= 10^4. Throws BudgetExceeded (with the
// partial maximum) once more than max_operations summands are needed.
inline constexpr std::uint64_t kDefaultCorrelationOps = 2'000'000'000ULL;
CorrelationResult correlation_measure(
    const BitSeq& s, std::size_t N, unsigned k, std::size_t max_lag,
    std::uint64_t max_operations = kDefaultCorrelationOps);

}  // namespace seqcx

#endif  // SEQCX_COMPLEXITY_HPP_
