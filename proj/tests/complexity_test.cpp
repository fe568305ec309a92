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

#include "seqcx/complexity.hpp"

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "seqcx/sequences.hpp"
#include "test_util.hpp"

namespace seqcx {
namespace {

using testing::NaiveRank;
using testing::RandomBits;
using testing::Unpack;

BitSeq Bits(const char* s) { return BitSeq::FromString(s); }

const SequenceSpec kTprime = SequenceSpec::ThueMorse(IndexPolynomial::Monomial(2));

// Shortest linear recurrence by enumerating every connection vector of every
// length. Only usable for short prefixes.
std::size_t ExhaustiveLinearComplexity(const BitSeq& s, std::size_t N) {
  bool all_zero = true;
  for (std::size_t i = 0; i < N; ++i) all_zero &= !s[i];
  if (all_zero) return 0;
  for (std::size_t L = 1; L <= N; ++L) {
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << L); ++c) {
      bool ok = true;
      for (std::size_t n = L; n < N && ok; ++n) {
        bool v = false;
        for (std::size_t i = 1; i <= L; ++i) {
          if ((c >> (i - 1)) & 1u) v ^= s[n - i];
        }
        ok = v == s[n];
      }
      if (ok) return L;
    }
  }
  return N;
}

// ------------------------------------------------------------------ MOC

TEST(MocNaive, Examples) {
  EXPECT_EQ(moc_naive(Bits("00000"), 5).value, 0u);
  EXPECT_EQ(moc_naive(Bits("00001"), 5).value, 4u);
  EXPECT_FALSE(moc_naive(Bits("00001"), 5).witness.has_value());

  const BitSeq t = prefix(SequenceSpec::ThueMorse(), 8);
  const MocResult r = moc_naive(t, 8);
  EXPECT_EQ(r.value, 3u);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, (MocWitness{0, 3, 2}));
  EXPECT_TRUE(moc_witness_valid(t, 8, r));
}

TEST(MocNaive, Errors) {
  EXPECT_THROW(moc_naive(Bits("01"), 0), std::invalid_argument);
  EXPECT_THROW(moc_naive(Bits("01"), 3), std::length_error);
  EXPECT_THROW(moc_fast(Bits("01"), 0), std::invalid_argument);
}

TEST(MocFast, Examples) {
  EXPECT_EQ(moc_fast(Bits("01"), 2).value, 1u);
  EXPECT_EQ(moc_fast(Bits("0"), 1).value, 0u);
  EXPECT_EQ(moc_fast(Bits("11110"), 5).value, 4u);
  EXPECT_EQ(moc_fast(Bits("11111"), 5).value, 0u);
  const BitSeq t = prefix(SequenceSpec::ThueMorse(), 8);
  EXPECT_EQ(moc_fast(t, 8).value, 3u);
  const BitSeq tp = prefix(kTprime, 21);
  EXPECT_GE(moc_fast(tp, 21).value, 3u);
}

TEST(MocFast, AgreesWithNaiveOnRandomStrings) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t N = 1 + rng() % 300;
    // Biased strings give long runs and more degenerate prefixes.
    BitSeq s(N);
    const unsigned bias = rng() % 4;
    for (std::size_t i = 0; i < N; ++i) {
      s.set(i, bias == 0 ? (rng() % 16 == 0) : (rng() & 1u));
    }
    const MocResult fast = moc_fast(s, N);
    const MocResult naive = moc_naive(s, N);
    ASSERT_EQ(fast.value, naive.value) << s.to_string();
    EXPECT_TRUE(moc_witness_valid(s, N, fast)) << s.to_string();
    EXPECT_TRUE(moc_witness_valid(s, N, naive)) << s.to_string();
  }
}

TEST(MocFast, LongWindowsUseStringKeys) {
  // A block of 100 random bits repeated with different successors forces
  // windows longer than a machine word in the naive oracle.
  std::mt19937_64 rng(8);
  const BitSeq block = RandomBits(rng, 100);
  BitSeq s;
  for (int rep = 0; rep < 2; ++rep) {
    for (std::size_t i = 0; i < block.size(); ++i) s.push_back(block[i]);
    s.push_back(rep == 0);
  }
  const auto naive = moc_naive(s, s.size());
  EXPECT_EQ(moc_fast(s, s.size()).value, naive.value);
  EXPECT_GE(naive.value, 101u);
}

TEST(MocProfile, MatchesNaivePointwise) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    const BitSeq s = RandomBits(rng, 500);
    const auto profile = moc_profile(s, 500);
    ASSERT_EQ(profile.points.size(), 500u);
    for (std::size_t N = 1; N <= 500; ++N) {
      ASSERT_EQ(profile.points[N - 1].first, N);
      ASSERT_EQ(profile.points[N - 1].second, moc_naive(s, N).value) << N;
    }
  }
  const auto zeros = moc_profile(BitSeq(5), 5);
  for (const auto& [N, v] : zeros.points) EXPECT_EQ(v, 0u);
}

TEST(MocProfile, NonDecreasing) {
  for (const auto& spec : {SequenceSpec::ThueMorse(), kTprime,
                           SequenceSpec::Pattern(2, IndexPolynomial::Monomial(2))}) {
    const auto p = moc_profile(prefix(spec, 3000), 3000);
    for (std::size_t i = 1; i < p.points.size(); ++i) {
      ASSERT_LE(p.points[i - 1].second, p.points[i].second);
    }
  }
}

// ------------------------------------------------------- linear complexity

TEST(LinearComplexity, Examples) {
  EXPECT_EQ(linear_complexity(BitSeq(10), 10), 0u);
  for (std::size_t N = 1; N <= 130; ++N) {
    BitSeq s(N);
    s.set(N - 1, true);
    EXPECT_EQ(linear_complexity(s, N), N);
  }
}

TEST(LinearComplexity, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t N = 1 + rng() % 16;
    const BitSeq s = RandomBits(rng, N);
    ASSERT_EQ(linear_complexity(s, N), ExhaustiveLinearComplexity(s, N))
        << s.to_string();
  }
}

TEST(LinearComplexity, MSequenceHasItsRegisterLength) {
  // x^31 + x^3 + 1 is primitive: s_n = s_{n-28} + s_{n-31}.
  BitSeq s(2000);
  s.set(0, true);
  for (std::size_t n = 31; n < s.size(); ++n) s.set(n, s[n - 28] ^ s[n - 31]);
  EXPECT_EQ(linear_complexity(s, 2000), 31u);
  EXPECT_EQ(linear_complexity(s, 62), 31u);
}

TEST(LinearComplexity, ProfileIsSelfConsistent) {
  std::mt19937_64 rng(17);
  const BitSeq s = RandomBits(rng, 1500);
  const auto p = linear_profile(s, 1500);
  for (std::size_t N : {1u, 2u, 63u, 64u, 65u, 200u, 777u, 1500u}) {
    EXPECT_EQ(p.points[N - 1].second, linear_complexity(s, N));
  }
  for (std::size_t i = 1; i < p.points.size(); ++i) {
    ASSERT_LE(p.points[i - 1].second, p.points[i].second);
    // Random sequences track N/2 closely.
    ASSERT_LE(std::abs(static_cast<long>(2 * p.points[i].second) -
                       static_cast<long>(p.points[i].first)),
              40);
  }
}

TEST(LinearComplexity, BoundsMaximumOrderComplexity) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t N = 1 + rng() % 400;
    const BitSeq s = RandomBits(rng, N);
    const auto m = moc_profile(s, N);
    const auto l = linear_profile(s, N);
    for (std::size_t i = 0; i < N; ++i) {
      ASSERT_LE(m.points[i].second, l.points[i].second);
    }
  }
}

// ---------------------------------------------------- expansion complexity

// Every nonzero h with monomials of total degree < d, evaluated at G.
bool AnyAnnihilatorBelow(const BitSeq& s, std::size_t N, std::size_t d) {
  std::vector<F2Bivariate::Monomial> monos;
  for (unsigned t = 0; t < d; ++t) {
    for (unsigned j = 0; j <= t; ++j) monos.emplace_back(t - j, j);
  }
  const F2Series g(s, N);
  SeriesPowers powers(g);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << monos.size());
       ++mask) {
    F2Bivariate h;
    for (std::size_t b = 0; b < monos.size(); ++b) {
      if ((mask >> b) & 1u) h.toggle(monos[b].first, monos[b].second);
    }
    if (eval_bivariate(h, powers).is_zero()) return true;
  }
  return false;
}

// Rows x^i G^j (i + j <= d) are independent iff no annihilator of degree
// <= d exists; checked with the unpacked rank routine.
bool IndependentUpTo(const BitSeq& s, std::size_t N, std::size_t d) {
  const F2Series g(s, N);
  SeriesPowers powers(g);
  std::vector<std::vector<std::uint8_t>> rows;
  for (unsigned t = 0; t <= d; ++t) {
    for (unsigned j = 0; j <= t; ++j) {
      rows.push_back(Unpack(powers.power(j).shifted(t - j).to_bitseq()));
    }
  }
  return NaiveRank(rows) == rows.size();
}

TEST(ExpansionComplexity, Examples) {
  EXPECT_EQ(expansion_complexity(BitSeq(16), 16).value, 0u);
  EXPECT_FALSE(expansion_complexity(BitSeq(16), 16).annihilator.has_value());

  const EcResult ones = expansion_complexity(Bits("11"), 2);
  EXPECT_EQ(ones.value, 1u);
  ASSERT_TRUE(ones.annihilator.has_value());
  EXPECT_EQ(*ones.annihilator, F2Bivariate({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_FALSE(AnyAnnihilatorBelow(Bits("11"), 2, 1));

  const BitSeq t = prefix(SequenceSpec::ThueMorse(), 256);
  for (std::size_t N = 1; N <= 256; N += 5) {
    EXPECT_LE(expansion_complexity(t, N).value, 5u) << N;
  }
}

TEST(ExpansionComplexity, Errors) {
  EXPECT_THROW(expansion_complexity(Bits("11"), 2, 0), std::invalid_argument);
  EXPECT_THROW(expansion_complexity(Bits("11"), 3), std::length_error);
  EXPECT_THROW(expansion_complexity(Bits("11"), 0), std::invalid_argument);
}

TEST(ExpansionComplexity, ReportsExceededCap) {
  std::mt19937_64 rng(12);
  const BitSeq s = RandomBits(rng, 200);
  const EcResult r = expansion_complexity(s, 200, 2);
  EXPECT_TRUE(r.exceeds_dmax);
  EXPECT_EQ(r.value, 3u);
}

TEST(ExpansionComplexity, AnnihilatorIsValidAndMinimal) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t N = 1 + rng() % 64;
    const BitSeq s = RandomBits(rng, N);
    const EcResult r = expansion_complexity(s, N);
    if (r.value == 0) continue;
    ASSERT_FALSE(r.exceeds_dmax);
    ASSERT_TRUE(r.annihilator.has_value());
    const F2Bivariate& h = *r.annihilator;
    EXPECT_FALSE(h.is_zero());
    EXPECT_EQ(h.total_degree(), r.value);
    EXPECT_TRUE(eval_bivariate(h, F2Series(s, N)).is_zero());
    EXPECT_TRUE(IndependentUpTo(s, N, r.value - 1)) << s.to_string();
    if (r.value <= 4) EXPECT_FALSE(AnyAnnihilatorBelow(s, N, r.value));
    EXPECT_LE(r.value * r.value, 2 * N);
  }
}

TEST(ExpansionComplexity, CeilSqrt) {
  EXPECT_EQ(ceil_sqrt_2n(1), 2u);
  EXPECT_EQ(ceil_sqrt_2n(2), 2u);
  EXPECT_EQ(ceil_sqrt_2n(8), 4u);
  EXPECT_EQ(ceil_sqrt_2n(9), 5u);
  EXPECT_EQ(ceil_sqrt_2n(512), 32u);
}

// ------------------------------------------------------- exploratory

std::size_t DistinctFactors(const BitSeq& s, std::size_t n) {
  const std::string text = s.to_string();
  std::set<std::string> seen;
  for (std::size_t i = 0; i + n <= text.size(); ++i) seen.insert(text.substr(i, n));
  return seen.size();
}

TEST(SubwordComplexity, Examples) {
  EXPECT_EQ(subword_complexity(Bits("010101"), 2), 2u);
  const BitSeq t = prefix(SequenceSpec::ThueMorse(), 1 << 16);
  EXPECT_EQ(subword_complexity(t, 3), DistinctFactors(t.prefix(4096), 3));
  EXPECT_EQ(subword_complexity(t, 3), 6u);
  EXPECT_EQ(subword_complexity(t, 4), 10u);
  EXPECT_THROW(subword_complexity(t, 0), std::invalid_argument);
}

TEST(SubwordComplexity, MatchesSetOfFactorsAndIsBounded) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t len = 1 + rng() % 300;
    BitSeq s = RandomBits(rng, len);
    if (trial % 3 == 0) s = prefix(kTprime, len);
    for (std::size_t n : {1ul, 2ul, 5ul, 30ul, 64ul, 65ul, 100ul}) {
      if (n > len) continue;
      const auto v = subword_complexity(s, n);
      ASSERT_EQ(v, DistinctFactors(s, n));
      const double cap = std::min(std::pow(2.0, n), double(len - n + 1));
      ASSERT_LE(double(v), cap);
    }
  }
}

TEST(BlockFrequencies, Examples) {
  const auto zeros = block_frequencies(Bits("0000"), 1);
  EXPECT_EQ(zeros.counts, (std::vector<std::uint64_t>{4, 0}));
  const auto f = block_frequencies(Bits("0110"), 2);
  EXPECT_EQ(f.counts, (std::vector<std::uint64_t>{0, 1, 1, 1}));
  EXPECT_EQ(f.block_label(1), "01");
  EXPECT_EQ(f.total(), 3u);
  EXPECT_THROW(block_frequencies(Bits("0110"), 17), std::invalid_argument);
}

// Direct evaluation over every window length and lag tuple.
std::size_t NaiveCorrelation(const BitSeq& s, std::size_t N,
                             const std::vector<std::size_t>& lags) {
  std::size_t best = 0;
  for (std::size_t M = 1; M + lags.back() <= N; ++M) {
    long sum = 0;
    for (std::size_t n = 0; n < M; ++n) {
      int parity = 0;
      for (auto d : lags) parity ^= s[n + d];
      sum += parity ? -1 : 1;
    }
    best = std::max<std::size_t>(best, static_cast<std::size_t>(std::labs(sum)));
  }
  return best;
}

TEST(CorrelationMeasure, Examples) {
  EXPECT_EQ(correlation_measure(BitSeq(50), 50, 1, 49).value, 50u);
  BitSeq alt(40);
  for (std::size_t i = 1; i < 40; i += 2) alt.set(i, true);
  const auto r = correlation_measure(alt, 40, 2, 1);
  EXPECT_EQ(r.value, 39u);
  EXPECT_EQ(r.lags, (std::vector<std::size_t>{0, 1}));
}

TEST(CorrelationMeasure, MatchesDirectEvaluation) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t N = 8 + rng() % 90;
    const BitSeq s = RandomBits(rng, N);
    const unsigned k = 1 + trial % 3;
    const std::size_t max_lag = std::min<std::size_t>(N - 1, 12);
    std::size_t best = 0;
    std::vector<std::size_t> lags(k);
    std::function<void(unsigned, std::size_t)> rec = [&](unsigned depth,
                                                         std::size_t from) {
      if (depth == k) {
        best = std::max(best, NaiveCorrelation(s, N, lags));
        return;
      }
      for (std::size_t d = from; d <= max_lag; ++d) {
        lags[depth] = d;
        rec(depth + 1, d + 1);
      }
    };
    rec(0, 0);
    const auto r = correlation_measure(s, N, k, max_lag);
    EXPECT_EQ(r.value, best);
    EXPECT_EQ(NaiveCorrelation(s, N, r.lags), r.value);
  }
}

TEST(CorrelationMeasure, ThueMorseOrderTwoIsLarge) {
  const BitSeq t = prefix(SequenceSpec::ThueMorse(), 256);
  const auto r = correlation_measure(t, 256, 2, 255);
  EXPECT_EQ(NaiveCorrelation(t, 256, r.lags), r.value);
  EXPECT_GE(r.value, 256u / 4);
}

TEST(CorrelationMeasure, BudgetAndPreconditions) {
  const BitSeq t = prefix(SequenceSpec::ThueMorse(), 1000);
  try {
    correlation_measure(t, 1000, 3, 999, 1'000'000);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GT(e.partial(), 0u);
  }
  EXPECT_THROW(correlation_measure(t, 100, 5, 10), std::invalid_argument);
  EXPECT_THROW(correlation_measure(t, 100, 0, 10), std::invalid_argument);
}

}  // namespace
}  // namespace seqcx
