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

#include "seqcx/f2algebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "seqcx/detail/bitops.hpp"

namespace seqcx {

namespace {

using detail::words_for;
using detail::xor_shifted;

void mask_tail(std::vector<std::uint64_t>& w, std::size_t bits) {
  if (bits & 63) w.back() &= (std::uint64_t{1} << (bits & 63)) - 1;
}

}  // namespace

// ---------------------------------------------------------------- F2Series

F2Series::F2Series(std::size_t truncation)
    : words_(words_for(truncation), 0), n_(truncation) {
  if (truncation == 0) {
    throw std::invalid_argument("series truncation must be positive");
  }
}

F2Series::F2Series(const BitSeq& coeffs, std::size_t truncation)
    : F2Series(truncation) {
  if (coeffs.size() < truncation) {
    throw std::length_error("sequence prefix shorter than truncation");
  }
  std::copy_n(coeffs.words().begin(), words_.size(), words_.begin());
  mask_tail(words_, n_);
}

F2Series F2Series::One(std::size_t truncation) {
  F2Series s(truncation);
  s.words_[0] = 1;
  return s;
}

void F2Series::set_coeff(std::size_t i, bool value) {
  if (i >= n_) throw std::out_of_range("coefficient index beyond truncation");
  const std::uint64_t m = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= m;
  } else {
    words_[i >> 6] &= ~m;
  }
}

bool F2Series::is_zero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> F2Series::lowest_term() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return std::nullopt;
}

void F2Series::require_same_truncation(const F2Series& o) const {
  if (o.n_ != n_) throw std::invalid_argument("mismatched series truncation");
}

F2Series& F2Series::operator+=(const F2Series& o) {
  require_same_truncation(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

F2Series operator*(const F2Series& a, const F2Series& b) {
  a.require_same_truncation(b);
  F2Series out(a.n_);
  auto ones = [](const F2Series& s) {
    std::size_t c = 0;
    for (auto w : s.words_) c += std::popcount(w);
    return c;
  };
  // Iterate over the sparser operand's set bits.
  const bool a_sparser = ones(a) <= ones(b);
  const F2Series& bits = a_sparser ? a : b;
  const F2Series& shifted = a_sparser ? b : a;
  for (std::size_t w = 0; w < bits.words_.size(); ++w) {
    std::uint64_t word = bits.words_[w];
    while (word) {
      const std::size_t i = w * 64 + std::countr_zero(word);
      word &= word - 1;
      xor_shifted(out.words_.data(), out.words_.size(), shifted.words_.data(),
                  shifted.words_.size(), i);
    }
  }
  mask_tail(out.words_, out.n_);
  return out;
}

F2Series F2Series::shifted(std::size_t shift) const {
  F2Series out(n_);
  out.add_shifted(*this, shift);
  return out;
}

void F2Series::add_shifted(const F2Series& other, std::size_t shift) {
  require_same_truncation(other);
  if (shift >= n_) return;
  xor_shifted(words_.data(), words_.size(), other.words_.data(),
              other.words_.size(), shift);
  mask_tail(words_, n_);
}

BitSeq F2Series::to_bitseq() const {
  BitSeq out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (coeff(i)) out.set(i, true);
  }
  return out;
}

F2Series series_from_bitseq(const BitSeq& s, std::size_t N) {
  if (N == 0) throw std::invalid_argument("series truncation must be positive");
  if (s.size() < N) {
    throw std::length_error("sequence prefix shorter than requested N");
  }
  return F2Series(s, N);
}

F2Series series_mul(const F2Series& a, const F2Series& b) { return a * b; }

// ------------------------------------------------------------- F2Bivariate

F2Bivariate::F2Bivariate(std::set<Monomial> monomials)
    : monomials_(std::move(monomials)) {}

void F2Bivariate::toggle(unsigned i, unsigned j) {
  auto [it, inserted] = monomials_.insert({i, j});
  if (!inserted) monomials_.erase(it);
}

unsigned F2Bivariate::total_degree() const {
  unsigned d = 0;
  for (const auto& [i, j] : monomials_) d = std::max(d, i + j);
  return d;
}

unsigned F2Bivariate::max_y_degree() const {
  unsigned d = 0;
  for (const auto& m : monomials_) d = std::max(d, m.second);
  return d;
}

F2Bivariate& F2Bivariate::operator+=(const F2Bivariate& o) {
  for (const auto& [i, j] : o.monomials_) toggle(i, j);
  return *this;
}

F2Bivariate operator*(const F2Bivariate& a, const F2Bivariate& b) {
  F2Bivariate out;
  for (const auto& [ai, aj] : a.monomials_) {
    for (const auto& [bi, bj] : b.monomials_) out.toggle(ai + bi, aj + bj);
  }
  return out;
}

std::string F2Bivariate::to_string() const {
  if (monomials_.empty()) return "0";
  auto power = [](char var, unsigned e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(e);
  };
  std::string out;
  // Highest total degree first.
  std::vector<Monomial> ordered(monomials_.begin(), monomials_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    if (l.first + l.second != r.first + r.second) {
      return l.first + l.second > r.first + r.second;
    }
    return l.second > r.second;
  });
  for (const auto& [i, j] : ordered) {
    if (!out.empty()) out += " + ";
    std::string term = power('x', i);
    const std::string y = power('y', j);
    if (!term.empty() && !y.empty()) term += "*";
    term += y;
    out += term.empty() ? "1" : term;
  }
  return out;
}

// ------------------------------------------------------------ SeriesPowers

SeriesPowers::SeriesPowers(F2Series g) {
  powers_.push_back(F2Series::One(g.truncation()));
  powers_.push_back(std::move(g));
}

const F2Series& SeriesPowers::power(unsigned j) {
  while (powers_.size() <= j) {
    powers_.push_back(powers_.back() * powers_[1]);
  }
  return powers_[j];
}

F2Series eval_bivariate(const F2Bivariate& h, SeriesPowers& powers) {
  F2Series out(powers.base().truncation());
  for (const auto& [i, j] : h.monomials()) {
    out.add_shifted(powers.power(j), i);
  }
  return out;
}

F2Series eval_bivariate(const F2Bivariate& h, const F2Series& g) {
  SeriesPowers powers(g);
  return eval_bivariate(h, powers);
}

// ---------------------------------------------------------------- F2Matrix

F2Matrix::F2Matrix(std::size_t nrows, std::size_t ncols)
    : nrows_(nrows),
      ncols_(ncols),
      stride_(words_for(ncols)),
      data_(nrows * stride_, 0) {}

F2Matrix::F2Matrix(const std::vector<BitSeq>& rows)
    : F2Matrix(rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols_) {
      throw std::invalid_argument("matrix rows must have equal length");
    }
    std::copy(rows[r].words().begin(), rows[r].words().end(),
              data_.begin() + r * stride_);
  }
}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
  if (r >= nrows_ || c >= ncols_) throw std::out_of_range("matrix index");
  return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
}

void F2Matrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= nrows_ || c >= ncols_) throw std::out_of_range("matrix index");
  std::uint64_t& w = data_[r * stride_ + (c >> 6)];
  const std::uint64_t m = std::uint64_t{1} << (c & 63);
  w = value ? (w | m) : (w & ~m);
}

std::span<const std::uint64_t> F2Matrix::row(std::size_t r) const {
  return {data_.data() + r * stride_, stride_};
}

// -------------------------------------------------------------- RowReducer

RowReducer::RowReducer(std::size_t ncols)
    : ncols_(ncols), stride_(words_for(ncols)), pivot_owner_(ncols, -1) {}

std::optional<BitSeq> RowReducer::insert(std::span<const std::uint64_t> row) {
  if (row.size() < stride_) {
    throw std::invalid_argument("row shorter than reducer width");
  }
  const std::size_t index = inserted_++;
  std::vector<std::uint64_t> r(row.begin(), row.begin() + stride_);
  if (stride_) mask_tail(r, ncols_);
  std::vector<std::uint64_t> combo(words_for(inserted_), 0);
  combo[index >> 6] |= std::uint64_t{1} << (index & 63);

  for (std::size_t w = 0; w < stride_; ++w) {
    while (r[w]) {
      const std::size_t col = w * 64 + std::countr_zero(r[w]);
      const int owner = pivot_owner_[col];
      if (owner < 0) {
        pivot_owner_[col] = static_cast<int>(basis_.size());
        basis_.push_back({std::move(r), std::move(combo)});
        return std::nullopt;
      }
      const Entry& e = basis_[owner];
      // Basis rows have no bits left of their pivot.
      for (std::size_t k = w; k < stride_; ++k) r[k] ^= e.row[k];
      for (std::size_t k = 0; k < e.combo.size(); ++k) combo[k] ^= e.combo[k];
    }
  }

  BitSeq dependency(inserted_);
  for (std::size_t i = 0; i < inserted_; ++i) {
    if ((combo[i >> 6] >> (i & 63)) & 1u) dependency.set(i, true);
  }
  return dependency;
}

std::optional<BitSeq> kernel_vector(const F2Matrix& m) {
  RowReducer reducer(m.ncols());
  for (std::size_t r = 0; r < m.nrows(); ++r) {
    if (auto dep = reducer.insert(m.row(r))) {
      BitSeq v(m.nrows());
      for (std::size_t i = 0; i < dep->size(); ++i) {
        if ((*dep)[i]) v.set(i, true);
      }
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace seqcx
