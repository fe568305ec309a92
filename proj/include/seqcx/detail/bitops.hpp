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

#ifndef SEQCX_DETAIL_BITOPS_HPP_
#define SEQCX_DETAIL_BITOPS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>

namespace seqcx::detail {

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// dst ^= src << shift (bit shift toward higher indices), writing only the
// first dst_words words of dst.
inline void xor_shifted(std::uint64_t* dst, std::size_t dst_words,
                        const std::uint64_t* src, std::size_t src_words,
                        std::size_t shift) {
  const std::size_t ws = shift >> 6;
  const unsigned bs = shift & 63;
  if (ws >= dst_words || src_words == 0) return;
  const std::size_t end = std::min(dst_words, src_words + ws + (bs ? 1 : 0));
  if (bs == 0) {
    for (std::size_t w = ws; w < end; ++w) dst[w] ^= src[w - ws];
    return;
  }
  dst[ws] ^= src[0] << bs;
  for (std::size_t w = ws + 1; w < end; ++w) {
    const std::size_t k = w - ws;
    std::uint64_t v = src[k - 1] >> (64 - bs);
    if (k < src_words) v |= src[k] << bs;
    dst[w] ^= v;
  }
}

}  // namespace seqcx::detail

#endif  // SEQCX_DETAIL_BITOPS_HPP_
