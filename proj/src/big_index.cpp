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

#include "seqcx/big_index.hpp"

#include <iterator>
#include <stdexcept>

namespace seqcx {

namespace mp = boost::multiprecision;

BigIndex BigIndex::Pow2(unsigned exponent) {
  BigIndex out;
  mp::bit_set(out.value_, exponent);
  return out;
}

BigIndex BigIndex::Parse(const std::string& decimal) {
  if (decimal.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : decimal) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a nonnegative decimal: " + decimal);
    }
  }
  BigIndex out;
  out.value_ = mp::cpp_int(decimal);
  return out;
}

BigIndex& BigIndex::operator-=(const BigIndex& o) {
  if (value_ < o.value_) throw std::domain_error("BigIndex underflow");
  value_ -= o.value_;
  return *this;
}

std::size_t BigIndex::bit_length() const {
  if (value_.is_zero()) return 0;
  return static_cast<std::size_t>(mp::msb(value_)) + 1;
}

bool BigIndex::bit(std::size_t i) const {
  return mp::bit_test(value_, static_cast<unsigned>(i));
}

std::size_t BigIndex::lowest_bit() const {
  if (value_.is_zero()) throw std::domain_error("lowest_bit of zero");
  return static_cast<std::size_t>(mp::lsb(value_));
}

std::optional<std::uint64_t> BigIndex::to_u64() const {
  if (bit_length() > 64) return std::nullopt;
  return static_cast<std::uint64_t>(value_);
}

std::vector<std::uint64_t> BigIndex::limbs() const {
  std::vector<std::uint64_t> out;
  if (value_.is_zero()) return out;
  mp::export_bits(value_, std::back_inserter(out), 64, false);
  return out;
}

}  // namespace seqcx
