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

#ifndef SEQCX_SEQUENCES_HPP_
#define SEQCX_SEQUENCES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqcx/big_index.hpp"
#include "seqcx/bitseq.hpp"

namespace seqcx {

// Integer polynomial with nonnegative coefficients, constant term first.
// Degree is at least 1, so it maps naturals to naturals injectively.
class IndexPolynomial {
 public:
  // Throws std::invalid_argument unless the leading coefficient is nonzero
  // and the degree is >= 1.
  explicit IndexPolynomial(std::vector<std::uint64_t> coeffs);

  static IndexPolynomial Identity() { return IndexPolynomial({0, 1}); }
  static IndexPolynomial Monomial(unsigned degree);

  // Accepts "i", "i^d" and constant-first coefficient lists "c0,c1,...,cd".
  static IndexPolynomial Parse(std::string_view text);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  bool is_identity() const { return coeffs_ == std::vector<std::uint64_t>{0, 1}; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

  BigIndex operator()(const BigIndex& i) const;
  // nullopt when the value does not fit in 64 bits.
  std::optional<std::uint64_t> eval_u64(std::uint64_t i) const;

  // "i^2" style when a monomial, otherwise the coefficient list.
  std::string to_string() const;

  friend bool operator==(const IndexPolynomial&,
                         const IndexPolynomial&) = default;

 private:
  std::vector<std::uint64_t> coeffs_;
};

enum class Family { kThueMorse, kPattern, kExplicitBits };

// A base sequence sampled along an index polynomial: term i is
// base[poly(i)].
struct SequenceSpec {
  Family family = Family::kThueMorse;
  unsigned k = 1;  // pattern length, kPattern only
  IndexPolynomial poly = IndexPolynomial::Identity();
  BitSeq bits;  // kExplicitBits only

  static SequenceSpec ThueMorse(IndexPolynomial poly = IndexPolynomial::Identity());
  // Throws std::invalid_argument for k == 0.
  static SequenceSpec Pattern(unsigned k,
                              IndexPolynomial poly = IndexPolynomial::Identity());
  static SequenceSpec Explicit(BitSeq bits,
                               IndexPolynomial poly = IndexPolynomial::Identity());

  std::string describe() const;
};

// Number of ones in the binary expansion.
unsigned ones_count(std::uint64_t n);
unsigned ones_count(const BigIndex& n);

// Overlapping occurrences of the block 1^k in the binary expansion of n
// (no leading zeros). pattern_count(n, 1) == ones_count(n).
// Throws std::invalid_argument for k == 0.
unsigned pattern_count(std::uint64_t n, unsigned k);
unsigned pattern_count(const BigIndex& n, unsigned k);

// Throws std::out_of_range for an explicit sequence read past its end.
bool term(const SequenceSpec& spec, const BigIndex& i);
bool term(const SequenceSpec& spec, std::uint64_t i);

BitSeq prefix(const SequenceSpec& spec, std::size_t N);

enum class DigitIdentity { kHolds, kFails, kNotApplicable };

// Checks s_k(a + b) == s_k(a) + s_k(b) when the binary supports of a and b
// are separated by at least k - 1 zero digits; kNotApplicable otherwise.
DigitIdentity digit_identity_check(const BigIndex& a, const BigIndex& b,
                                   unsigned k);

}  // namespace seqcx

#endif  // SEQCX_SEQUENCES_HPP_
