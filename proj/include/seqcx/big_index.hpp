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

#ifndef SEQCX_BIG_INDEX_HPP_
#define SEQCX_BIG_INDEX_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace seqcx {

// Exact nonnegative integer of unbounded size. Used for sequence indices
// such as (i + 2^(l+2k))^2 whose bit length exceeds a machine word.
class BigIndex {
 public:
  BigIndex() = default;
  BigIndex(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent

  static BigIndex Pow2(unsigned exponent);
  // Decimal digits only.
  static BigIndex Parse(const std::string& decimal);

  BigIndex& operator+=(const BigIndex& o) { value_ += o.value_; return *this; }
  BigIndex& operator*=(const BigIndex& o) { value_ *= o.value_; return *this; }
  BigIndex& operator<<=(unsigned s) { value_ <<= s; return *this; }
  // Throws std::domain_error if the result would be negative.
  BigIndex& operator-=(const BigIndex& o);

  friend BigIndex operator+(BigIndex a, const BigIndex& b) { return a += b; }
  friend BigIndex operator*(BigIndex a, const BigIndex& b) { return a *= b; }
  friend BigIndex operator<<(BigIndex a, unsigned s) { return a <<= s; }
  friend BigIndex operator-(BigIndex a, const BigIndex& b) { return a -= b; }

  friend bool operator==(const BigIndex& a, const BigIndex& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const BigIndex& a,
                                          const BigIndex& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return value_.is_zero(); }
  // Number of binary digits; 0 for zero.
  std::size_t bit_length() const;
  bool bit(std::size_t i) const;
  // Lowest set bit position. Requires a nonzero value.
  std::size_t lowest_bit() const;
  std::optional<std::uint64_t> to_u64() const;

  // Little-endian 64-bit limbs of the binary expansion (empty for zero).
  std::vector<std::uint64_t> limbs() const;

  BigIndex square() const { return *this * *this; }
  std::string to_string() const { return value_.str(); }

 private:
  boost::multiprecision::cpp_int value_;
};

}  // namespace seqcx

#endif  // SEQCX_BIG_INDEX_HPP_
