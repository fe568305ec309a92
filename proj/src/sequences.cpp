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

#include "seqcx/sequences.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace seqcx {

// --------------------------------------------------------- IndexPolynomial

IndexPolynomial::IndexPolynomial(std::vector<std::uint64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw std::invalid_argument("index polynomial must have degree >= 1");
  }
  if (coeffs_.back() == 0) {
    throw std::invalid_argument("leading coefficient must be nonzero");
  }
}

IndexPolynomial IndexPolynomial::Monomial(unsigned degree) {
  std::vector<std::uint64_t> c(degree + 1, 0);
  c.back() = 1;
  return IndexPolynomial(std::move(c));
}

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || p != end) {
    throw std::invalid_argument("invalid polynomial: " + std::string(whole));
  }
  return v;
}

}  // namespace

IndexPolynomial IndexPolynomial::Parse(std::string_view text) {
  if (text == "i") return Identity();
  if (text.size() > 2 && text.substr(0, 2) == "i^") {
    const auto d = parse_u64(text.substr(2), text);
    if (d < 1 || d > 64) {
      throw std::invalid_argument("invalid polynomial degree: " +
                                  std::string(text));
    }
    return Monomial(static_cast<unsigned>(d));
  }
  std::vector<std::uint64_t> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coeffs.push_back(parse_u64(text.substr(start, comma - start), text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return IndexPolynomial(std::move(coeffs));
}

BigIndex IndexPolynomial::operator()(const BigIndex& i) const {
  BigIndex acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * i + BigIndex(*it);
  }
  return acc;
}

std::optional<std::uint64_t> IndexPolynomial::eval_u64(std::uint64_t i) const {
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (__builtin_mul_overflow(acc, i, &acc) ||
        __builtin_add_overflow(acc, *it, &acc)) {
      return std::nullopt;
    }
  }
  return acc;
}

std::string IndexPolynomial::to_string() const {
  bool monomial = true;
  for (std::size_t d = 0; d + 1 < coeffs_.size(); ++d) {
    if (coeffs_[d] != 0) monomial = false;
  }
  if (monomial && coeffs_.back() == 1) {
    return degree() == 1 ? "i" : "i^" + std::to_string(degree());
  }
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (d) out += ',';
    out += std::to_string(coeffs_[d]);
  }
  return out;
}

// ------------------------------------------------------------ SequenceSpec

SequenceSpec SequenceSpec::ThueMorse(IndexPolynomial poly) {
  SequenceSpec s;
  s.family = Family::kThueMorse;
  s.poly = std::move(poly);
  return s;
}

SequenceSpec SequenceSpec::Pattern(unsigned k, IndexPolynomial poly) {
  if (k == 0) throw std::invalid_argument("pattern length k must be >= 1");
  SequenceSpec s;
  s.family = Family::kPattern;
  s.k = k;
  s.poly = std::move(poly);
  return s;
}

SequenceSpec SequenceSpec::Explicit(BitSeq bits, IndexPolynomial poly) {
  SequenceSpec s;
  s.family = Family::kExplicitBits;
  s.bits = std::move(bits);
  s.poly = std::move(poly);
  return s;
}

std::string SequenceSpec::describe() const {
  std::string base;
  switch (family) {
    case Family::kThueMorse: base = "thue-morse"; break;
    case Family::kPattern: base = "pattern(k=" + std::to_string(k) + ")"; break;
    case Family::kExplicitBits:
      base = "explicit(len=" + std::to_string(bits.size()) + ")";
      break;
  }
  return base + " along " + poly.to_string();
}

// ---------------------------------------------------------- digit counting

unsigned ones_count(std::uint64_t n) {
  return static_cast<unsigned>(std::popcount(n));
}

unsigned ones_count(const BigIndex& n) {
  unsigned total = 0;
  for (auto w : n.limbs()) total += static_cast<unsigned>(std::popcount(w));
  return total;
}

unsigned pattern_count(std::uint64_t n, unsigned k) {
  if (k == 0) throw std::invalid_argument("pattern length k must be >= 1");
  if (k > 64) return 0;
  // Bit p survives iff bits p..p+k-1 are all ones.
  std::uint64_t runs = n;
  for (unsigned t = 1; t < k && runs; ++t) runs &= runs >> 1;
  return static_cast<unsigned>(std::popcount(runs));
}

unsigned pattern_count(const BigIndex& n, unsigned k) {
  if (k == 0) throw std::invalid_argument("pattern length k must be >= 1");
  std::vector<std::uint64_t> runs = n.limbs();
  for (unsigned t = 1; t < k; ++t) {
    bool any = false;
    for (std::size_t w = 0; w < runs.size(); ++w) {
      std::uint64_t next = w + 1 < runs.size() ? runs[w + 1] : 0;
      runs[w] &= (runs[w] >> 1) | (next << 63);
      any |= runs[w] != 0;
    }
    if (!any) return 0;
  }
  unsigned total = 0;
  for (auto w : runs) total += static_cast<unsigned>(std::popcount(w));
  return total;
}

// -------------------------------------------------------------- generation

namespace {

bool base_term(const SequenceSpec& spec, std::uint64_t n) {
  switch (spec.family) {
    case Family::kThueMorse: return ones_count(n) & 1u;
    case Family::kPattern: return pattern_count(n, spec.k) & 1u;
    case Family::kExplicitBits:
      if (n >= spec.bits.size()) {
        throw std::out_of_range("index beyond explicit sequence");
      }
      return spec.bits[n];
  }
  return false;
}

bool base_term(const SequenceSpec& spec, const BigIndex& n) {
  if (auto small = n.to_u64()) return base_term(spec, *small);
  switch (spec.family) {
    case Family::kThueMorse: return ones_count(n) & 1u;
    case Family::kPattern: return pattern_count(n, spec.k) & 1u;
    case Family::kExplicitBits:
      throw std::out_of_range("index beyond explicit sequence");
  }
  return false;
}

}  // namespace

bool term(const SequenceSpec& spec, std::uint64_t i) {
  if (auto n = spec.poly.eval_u64(i)) return base_term(spec, *n);
  return base_term(spec, spec.poly(BigIndex(i)));
}

bool term(const SequenceSpec& spec, const BigIndex& i) {
  if (auto small = i.to_u64()) return term(spec, *small);
  return base_term(spec, spec.poly(i));
}

BitSeq prefix(const SequenceSpec& spec, std::size_t N) {
  BitSeq out(N);
  for (std::size_t i = 0; i < N; ++i) {
    if (term(spec, static_cast<std::uint64_t>(i))) out.set(i, true);
  }
  return out;
}

DigitIdentity digit_identity_check(const BigIndex& a, const BigIndex& b,
                                   unsigned k) {
  if (k == 0) throw std::invalid_argument("pattern length k must be >= 1");
  if (!a.is_zero() && !b.is_zero()) {
    const bool a_low = a.bit_length() <= b.bit_length();
    const BigIndex& low = a_low ? a : b;
    const BigIndex& high = a_low ? b : a;
    const std::size_t top_of_low = low.bit_length() - 1;
    const std::size_t bottom_of_high = high.lowest_bit();
    if (bottom_of_high <= top_of_low ||
        bottom_of_high - top_of_low - 1 < k - 1) {
      return DigitIdentity::kNotApplicable;
    }
  }
  return pattern_count(a + b, k) == pattern_count(a, k) + pattern_count(b, k)
             ? DigitIdentity::kHolds
             : DigitIdentity::kFails;
}

}  // namespace seqcx
