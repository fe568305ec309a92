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

#include "seqcx/bitseq.hpp"

#include <bit>
#include <stdexcept>

namespace seqcx {

BitSeq::BitSeq(std::size_t n, bool value)
    : words_((n + 63) / 64, value ? ~std::uint64_t{0} : 0), size_(n) {
  if (value && (n & 63)) words_.back() &= (std::uint64_t{1} << (n & 63)) - 1;
}

BitSeq BitSeq::FromString(std::string_view text) {
  BitSeq out;
  out.words_.reserve((text.size() + 63) / 64);
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    out.push_back(c == '1');
  }
  return out;
}

bool BitSeq::at(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("BitSeq index out of range");
  return (*this)[i];
}

void BitSeq::set(std::size_t i, bool value) {
  if (i >= size_) throw std::out_of_range("BitSeq index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

void BitSeq::push_back(bool value) {
  if ((size_ & 63) == 0) words_.push_back(0);
  if (value) words_[size_ >> 6] |= std::uint64_t{1} << (size_ & 63);
  ++size_;
}

BitSeq BitSeq::prefix(std::size_t n) const {
  if (n > size_) throw std::length_error("prefix longer than sequence");
  BitSeq out;
  out.size_ = n;
  out.words_.assign(words_.begin(), words_.begin() + (n + 63) / 64);
  if (n & 63) out.words_.back() &= (std::uint64_t{1} << (n & 63)) - 1;
  return out;
}

std::uint64_t BitSeq::window(std::size_t pos, unsigned width) const {
  if (width == 0 || pos >= size_) return 0;
  const std::size_t w = pos >> 6;
  const unsigned off = pos & 63;
  std::uint64_t v = words_[w] >> off;
  if (off && w + 1 < words_.size()) v |= words_[w + 1] << (64 - off);
  if (width < 64) v &= (std::uint64_t{1} << width) - 1;
  return v;
}

std::size_t BitSeq::count_ones() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string BitSeq::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

}  // namespace seqcx
