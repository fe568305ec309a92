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

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "seqcx/detail/bitops.hpp"

namespace seqcx {

std::string to_string(Measure m) {
  switch (m) {
    case Measure::kMoc: return "moc";
    case Measure::kLinear: return "lc";
    case Measure::kExpansion: return "ec";
    case Measure::kSubword: return "subword";
    case Measure::kCorrelation: return "corr";
  }
  return "unknown";
}

namespace {

void require_prefix(const BitSeq& s, std::size_t N) {
  if (N == 0) throw std::invalid_argument("prefix length N must be positive");
  if (N > s.size()) {
    throw std::length_error("N = " + std::to_string(N) +
                            " exceeds sequence length " +
                            std::to_string(s.size()));
  }
}

// Constant-prefix rule: if s_0 = ... = s_{N-2} = a then M is 0 when
// s_{N-1} = a and N - 1 otherwise.
std::optional<std::size_t> degenerate_moc(const BitSeq& s, std::size_t N) {
  const bool a = s[0];
  for (std::size_t i = 1; i + 1 < N; ++i) {
    if (s[i] != a) return std::nullopt;
  }
  return s[N - 1] == a ? 0 : N - 1;
}

// A pair of equal length-M windows inside the first N bits with different
// successors, or nullopt if the window -> successor map is single valued.
std::optional<MocWitness> find_conflict(const BitSeq& s, std::size_t N,
                                        std::size_t M,
                                        const std::string& text) {
  if (M >= N) return std::nullopt;
  const std::size_t count = N - M;
  if (M <= 64) {
    std::unordered_map<std::uint64_t, std::size_t> seen;
    seen.reserve(count * 2);
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t key = s.window(i, static_cast<unsigned>(M));
      auto [it, inserted] = seen.emplace(key, i);
      if (!inserted && s[it->second + M] != s[i + M]) {
        return MocWitness{it->second, i, M};
      }
    }
    return std::nullopt;
  }
  std::unordered_map<std::string_view, std::size_t> seen;
  seen.reserve(count * 2);
  const std::string_view all(text);
  for (std::size_t i = 0; i < count; ++i) {
    auto [it, inserted] = seen.emplace(all.substr(i, M), i);
    if (!inserted && s[it->second + M] != s[i + M]) {
      return MocWitness{it->second, i, M};
    }
  }
  return std::nullopt;
}

}  // namespace

MocResult moc_naive(const BitSeq& s, std::size_t N) {
  require_prefix(s, N);
  if (auto v = degenerate_moc(s, N)) return {*v, std::nullopt};
  const std::string text = N > 65 ? s.prefix(N).to_string() : std::string();
  std::optional<MocWitness> previous;
  for (std::size_t M = 0; M < N; ++M) {
    auto conflict = find_conflict(s, N, M, text);
    if (!conflict && M >= 1) return {M, previous};
    previous = conflict;
  }
  // Unreachable for a nonconstant prefix: order N - 1 leaves one window.
  return {N - 1, previous};
}

// ------------------------------------------------------------ MocTracker

MocTracker::MocTracker() { states_.push_back({0, -1, {-1, -1}, 0}); }

void MocTracker::append(bool bit) {
  const std::size_t pos = length_;
  const int c = bit ? 1 : 0;
  if (pos == 0) {
    first_bit_ = bit;
    constant_run_ = 1;
  } else if (constant_run_ == pos && bit == first_bit_) {
    ++constant_run_;
  }
  last_bit_ = bit;

  const int cur = static_cast<int>(states_.size());
  states_.push_back({states_[last_].len + 1, -1, {-1, -1}, pos});

  // Along the suffix-link path, the first state that already continues with
  // the other bit gives the longest suffix w of the old text such that both
  // w0 and w1 now occur.
  long ambiguous = -1;
  int other_target = -1;
  int p = last_;
  while (p != -1 && states_[p].next[c] == -1) {
    if (ambiguous < 0 && states_[p].next[1 - c] != -1) {
      ambiguous = static_cast<long>(states_[p].len);
      other_target = states_[p].next[1 - c];
    }
    states_[p].next[c] = cur;
    p = states_[p].link;
  }
  if (p == -1) {
    states_[cur].link = 0;
  } else {
    const int q = states_[p].next[c];
    if (states_[p].len + 1 == states_[q].len) {
      states_[cur].link = q;
    } else {
      const int clone = static_cast<int>(states_.size());
      State copy = states_[q];
      copy.len = states_[p].len + 1;
      states_.push_back(copy);
      while (p != -1 && states_[p].next[c] == q) {
        states_[p].next[c] = clone;
        p = states_[p].link;
      }
      states_[q].link = clone;
      states_[cur].link = clone;
    }
  }
  last_ = cur;

  if (ambiguous > longest_ambiguous_) {
    longest_ambiguous_ = ambiguous;
    const std::size_t w = static_cast<std::size_t>(ambiguous);
    const std::size_t here = pos - w;
    const std::size_t there = states_[other_target].first_end - w;
    witness_ = {std::min(here, there), std::max(here, there), w};
  }
  ++length_;
}

MocResult MocTracker::result() const {
  if (length_ == 0) {
    throw std::invalid_argument("prefix length N must be positive");
  }
  if (constant_run_ + 1 >= length_) {
    return {constant_run_ == length_ ? 0 : length_ - 1, std::nullopt};
  }
  return {static_cast<std::size_t>(longest_ambiguous_ + 1), witness_};
}

std::size_t MocTracker::value() const { return result().value; }

MocResult moc_fast(const BitSeq& s, std::size_t N) {
  require_prefix(s, N);
  MocTracker tracker;
  for (std::size_t i = 0; i < N; ++i) tracker.append(s[i]);
  return tracker.result();
}

ComplexityProfile moc_profile(const BitSeq& s, std::size_t Nmax) {
  require_prefix(s, Nmax);
  ComplexityProfile profile{Measure::kMoc, {}};
  profile.points.reserve(Nmax);
  MocTracker tracker;
  for (std::size_t i = 0; i < Nmax; ++i) {
    tracker.append(s[i]);
    profile.points.emplace_back(i + 1, tracker.value());
  }
  return profile;
}

bool moc_witness_valid(const BitSeq& s, std::size_t N,
                       const MocResult& result) {
  if (N == 0 || N > s.size()) return false;
  if (!result.witness) {
    auto v = degenerate_moc(s, N);
    return v && *v == result.value;
  }
  const MocWitness& w = *result.witness;
  if (result.value == 0 || w.window != result.value - 1) return false;
  if (w.first >= w.second || w.second + w.window >= N) return false;
  for (std::size_t t = 0; t < w.window; ++t) {
    if (s[w.first + t] != s[w.second + t]) return false;
  }
  return s[w.first + w.window] != s[w.second + w.window];
}

// ------------------------------------------------------- linear complexity

namespace {

std::size_t berlekamp_massey(const BitSeq& s, std::size_t N,
                             ComplexityProfile* profile) {
  using detail::words_for;
  // rev[j] = s[N-1-j], so s_{n-i} for i = 0, 1, ... is a contiguous run of
  // rev starting at N-1-n.
  BitSeq rev(N);
  for (std::size_t j = 0; j < N; ++j) {
    if (s[N - 1 - j]) rev.set(j, true);
  }
  const std::size_t stride = words_for(N + 2) + 1;
  std::vector<std::uint64_t> conn(stride, 0), prev(stride, 0), tmp(stride);
  conn[0] = prev[0] = 1;
  std::size_t L = 0, prev_L = 0, gap = 1;

  for (std::size_t n = 0; n < N; ++n) {
    const std::size_t base = N - 1 - n;
    std::uint64_t acc = 0;
    const std::size_t active = words_for(L + 1);
    for (std::size_t w = 0; w < active; ++w) {
      acc ^= conn[w] & rev.window(base + 64 * w);
    }
    const bool discrepancy = std::popcount(acc) & 1;
    if (!discrepancy) {
      ++gap;
    } else if (2 * L <= n) {
      std::copy(conn.begin(), conn.end(), tmp.begin());
      detail::xor_shifted(conn.data(), stride, prev.data(),
                          words_for(prev_L + 1), gap);
      prev.swap(tmp);
      prev_L = L;
      L = n + 1 - L;
      gap = 1;
    } else {
      detail::xor_shifted(conn.data(), stride, prev.data(),
                          words_for(prev_L + 1), gap);
      ++gap;
    }
    if (profile) profile->points.emplace_back(n + 1, L);
  }
  return L;
}

}  // namespace

std::size_t linear_complexity(const BitSeq& s, std::size_t N) {
  require_prefix(s, N);
  return berlekamp_massey(s, N, nullptr);
}

ComplexityProfile linear_profile(const BitSeq& s, std::size_t Nmax) {
  require_prefix(s, Nmax);
  ComplexityProfile profile{Measure::kLinear, {}};
  profile.points.reserve(Nmax);
  berlekamp_massey(s, Nmax, &profile);
  return profile;
}

// ---------------------------------------------------- expansion complexity

std::size_t ceil_sqrt_2n(std::size_t N) {
  std::size_t r = static_cast<std::size_t>(std::sqrt(2.0 * N));
  while (r * r < 2 * N) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= 2 * N) --r;
  return r;
}

EcResult expansion_complexity(const BitSeq& s, std::size_t N,
                              std::optional<std::size_t> dmax) {
  if (dmax && *dmax < 1) throw std::invalid_argument("dmax must be >= 1");
  require_prefix(s, N);
  const std::size_t limit = dmax.value_or(ceil_sqrt_2n(N) + 1);

  const F2Series g = series_from_bitseq(s, N);
  if (g.is_zero()) return {0, std::nullopt, false};

  SeriesPowers powers(g);
  RowReducer reducer(N);
  std::vector<F2Bivariate::Monomial> order;
  auto add_row = [&](unsigned i, unsigned j) {
    order.emplace_back(i, j);
    const F2Series row = powers.power(j).shifted(i);
    return reducer.insert(row.words());
  };

  add_row(0, 0);  // the constant 1 is never zero mod x^N
  for (std::size_t d = 1; d <= limit; ++d) {
    for (std::size_t j = 0; j <= d; ++j) {
      auto dependency = add_row(static_cast<unsigned>(d - j),
                                static_cast<unsigned>(j));
      if (!dependency) continue;
      F2Bivariate h;
      for (std::size_t r = 0; r < dependency->size(); ++r) {
        if ((*dependency)[r]) h.toggle(order[r].first, order[r].second);
      }
      return {d, std::move(h), false};
    }
  }
  return {limit + 1, std::nullopt, true};
}

// ------------------------------------------------------ subword complexity

std::size_t subword_complexity(const BitSeq& s, std::size_t n) {
  if (n == 0) throw std::invalid_argument("factor length must be positive");
  if (n > s.size()) throw std::length_error("factor longer than sequence");
  const std::size_t count = s.size() - n + 1;
  if (n <= 24) {
    std::vector<bool> seen(std::size_t{1} << n, false);
    std::size_t distinct = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const auto key = s.window(i, static_cast<unsigned>(n));
      if (!seen[key]) {
        seen[key] = true;
        ++distinct;
      }
    }
    return distinct;
  }
  if (n <= 64) {
    std::vector<std::uint64_t> keys(count);
    for (std::size_t i = 0; i < count; ++i) {
      keys[i] = s.window(i, static_cast<unsigned>(n));
    }
    std::sort(keys.begin(), keys.end());
    return static_cast<std::size_t>(
        std::unique(keys.begin(), keys.end()) - keys.begin());
  }
  const std::string text = s.to_string();
  std::unordered_set<std::string_view> seen;
  seen.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    seen.insert(std::string_view(text).substr(i, n));
  }
  return seen.size();
}

std::uint64_t BlockFrequencies::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::string BlockFrequencies::block_label(std::size_t b) const {
  std::string label(n, '0');
  for (std::size_t t = 0; t < n; ++t) {
    if ((b >> (n - 1 - t)) & 1u) label[t] = '1';
  }
  return label;
}

BlockFrequencies block_frequencies(const BitSeq& s, std::size_t n) {
  if (n == 0 || n > 16) {
    throw std::invalid_argument("block length must be in [1, 16]");
  }
  if (n > s.size()) throw std::length_error("block longer than sequence");
  BlockFrequencies out{n, std::vector<std::uint64_t>(std::size_t{1} << n, 0)};
  const std::size_t mask = (std::size_t{1} << n) - 1;
  std::size_t block = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    block = ((block << 1) | (s[i] ? 1u : 0u)) & mask;
    if (i + 1 >= n) ++out.counts[block];
  }
  return out;
}

// ------------------------------------------------------ correlation measure

CorrelationResult correlation_measure(const BitSeq& s, std::size_t N,
                                      unsigned k, std::size_t max_lag,
                                      std::uint64_t max_operations) {
  if (k < 1 || k > 4) throw std::invalid_argument("order k must be in [1, 4]");
  if (N > 10000) throw std::invalid_argument("N must be <= 10000");
  require_prefix(s, N);
  const std::size_t lag_cap = std::min(max_lag, N - 1);
  if (lag_cap + 1 < k) {
    throw std::invalid_argument("max_lag too small for k distinct lags");
  }

  CorrelationResult best;
  std::vector<std::size_t> lags(k);

  auto evaluate = [&]() {
    const std::size_t len = N - lags.back();
    if (best.operations + len > max_operations) {
      throw BudgetExceeded("correlation measure exceeds operation budget",
                           best.value);
    }
    best.operations += len;
    long sum = 0;
    for (std::size_t n0 = 0; n0 < len; n0 += 64) {
      const unsigned width =
          static_cast<unsigned>(std::min<std::size_t>(64, len - n0));
      std::uint64_t bits = 0;
      for (auto d : lags) bits ^= s.window(n0 + d, width);
      for (unsigned t = 0; t < width; ++t) {
        sum += ((bits >> t) & 1u) ? -1 : 1;
        const std::size_t mag = static_cast<std::size_t>(sum < 0 ? -sum : sum);
        if (mag > best.value) {
          best.value = mag;
          best.lags = lags;
          best.window = n0 + t + 1;
        }
      }
    }
  };

  std::function<void(unsigned, std::size_t)> choose = [&](unsigned depth,
                                                          std::size_t from) {
    if (depth == k) {
      evaluate();
      return;
    }
    for (std::size_t d = from; d + (k - 1 - depth) <= lag_cap; ++d) {
      lags[depth] = d;
      choose(depth + 1, d + 1);
    }
  };
  choose(0, 0);
  return best;
}

}  // namespace seqcx
