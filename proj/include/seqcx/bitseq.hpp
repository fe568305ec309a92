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

#ifndef SEQCX_BITSEQ_HPP_
#define SEQCX_BITSEQ_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace seqcx {

// Finite bit string over F2, packed little-endian into 64-bit words
// (bit i lives in word i / 64 at position i % 64). Bits past size() in the
// last word are always zero.
class BitSeq {
 public:
  BitSeq() = default;
  explicit BitSeq(std::size_t n, bool value = false);

  // Parses ASCII '0'/'1'. Throws std::invalid_argument on any other char.
  static BitSeq FromString(std::string_view text);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool operator[](std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  bool at(std::size_t i) const;
  void set(std::size_t i, bool value);
  void push_back(bool value);

  // First n bits. Throws std::length_error if n > size().
  BitSeq prefix(std::size_t n) const;

  // Up to 64 bits starting at `pos`, bit `pos` in the least significant
  // position. Bits beyond size() read as zero.
  std::uint64_t window(std::size_t pos, unsigned width = 64) const;

  std::size_t count_ones() const;
  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitSeq& a, const BitSeq& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace seqcx

#endif  // SEQCX_BITSEQ_HPP_
