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

#ifndef SEQCX_F2ALGEBRA_HPP_
#define SEQCX_F2ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqcx/bitseq.hpp"

namespace seqcx {

// Formal power series over F2 truncated mod x^N. Coefficient of x^i is bit i.
class F2Series {
 public:
  // Zero series mod x^N. N must be positive.
  explicit F2Series(std::size_t truncation);
  // Takes the first `truncation` bits of `coeffs`.
  F2Series(const BitSeq& coeffs, std::size_t truncation);

  static F2Series One(std::size_t truncation);

  std::size_t truncation() const { return n_; }
  bool coeff(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set_coeff(std::size_t i, bool value);
  bool is_zero() const;
  // Index of the lowest nonzero coefficient, if any.
  std::optional<std::size_t> lowest_term() const;

  F2Series& operator+=(const F2Series& o);
  friend F2Series operator+(F2Series a, const F2Series& b) { return a += b; }
  friend F2Series operator*(const F2Series& a, const F2Series& b);

  // this * x^shift mod x^N.
  F2Series shifted(std::size_t shift) const;
  // this += other * x^shift mod x^N.
  void add_shifted(const F2Series& other, std::size_t shift);

  BitSeq to_bitseq() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const F2Series& a, const F2Series& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  void require_same_truncation(const F2Series& o) const;

  std::vector<std::uint64_t> words_;
  std::size_t n_;
};

// Throws std::length_error if s is shorter than N, std::invalid_argument if
// N is zero.
F2Series series_from_bitseq(const BitSeq& s, std::size_t N);

// Throws std::invalid_argument on mismatched truncation.
F2Series series_mul(const F2Series& a, const F2Series& b);

// Sparse bivariate polynomial over F2: the set of monomials x^i y^j present.
class F2Bivariate {
 public:
  using Monomial = std::pair<unsigned, unsigned>;  // (x exponent, y exponent)

  F2Bivariate() = default;
  explicit F2Bivariate(std::set<Monomial> monomials);
  F2Bivariate(std::initializer_list<Monomial> monomials)
      : F2Bivariate(std::set<Monomial>(monomials)) {}

  // Adds x^i y^j over F2, i.e. toggles its presence.
  void toggle(unsigned i, unsigned j);
  bool contains(unsigned i, unsigned j) const {
    return monomials_.count({i, j}) != 0;
  }

  bool is_zero() const { return monomials_.empty(); }
  // Maximum i + j over the monomials; 0 for the zero polynomial.
  unsigned total_degree() const;
  unsigned max_y_degree() const;
  const std::set<Monomial>& monomials() const { return monomials_; }

  F2Bivariate& operator+=(const F2Bivariate& o);
  friend F2Bivariate operator+(F2Bivariate a, const F2Bivariate& b) {
    return a += b;
  }
  friend F2Bivariate operator*(const F2Bivariate& a, const F2Bivariate& b);
  friend bool operator==(const F2Bivariate&, const F2Bivariate&) = default;

  // e.g. "x^3*y^2 + x^2*y + x"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::set<Monomial> monomials_;
};

// Successive powers g^0, g^1, ... mod x^N, computed on demand and kept.
class SeriesPowers {
 public:
  explicit SeriesPowers(F2Series g);
  const F2Series& power(unsigned j);
  const F2Series& base() const { return powers_[1]; }

 private:
  std::vector<F2Series> powers_;
};

// Sum over monomials of x^i * g^j mod x^N.
F2Series eval_bivariate(const F2Bivariate& h, const F2Series& g);
F2Series eval_bivariate(const F2Bivariate& h, SeriesPowers& powers);

// Dense matrix over F2 with bit-packed rows.
class F2Matrix {
 public:
  F2Matrix(std::size_t nrows, std::size_t ncols);
  // All rows must have equal length; throws std::invalid_argument otherwise.
  explicit F2Matrix(const std::vector<BitSeq>& rows);

  std::size_t nrows() const { return nrows_; }
  std::size_t ncols() const { return ncols_; }
  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  std::span<const std::uint64_t> row(std::size_t r) const;

 private:
  std::size_t nrows_, ncols_, stride_;
  std::vector<std::uint64_t> data_;
};

// Incremental row echelon form. Rows are inserted one at a time and reduced
// against the basis; each basis row is keyed by its leftmost (lowest index)
// nonzero column. The first inserted row that reduces to zero yields the
// combination of inserted rows summing to zero.
class RowReducer {
 public:
  explicit RowReducer(std::size_t ncols);

  // Returns the dependency (bit r set iff inserted row r participates, the
  // new row included) when `row` lies in the span of earlier rows; otherwise
  // adds it to the basis and returns nullopt.
  std::optional<BitSeq> insert(std::span<const std::uint64_t> row);

  std::size_t rank() const { return basis_.size(); }
  std::size_t rows_inserted() const { return inserted_; }

 private:
  struct Entry {
    std::vector<std::uint64_t> row;
    std::vector<std::uint64_t> combo;
  };
  std::size_t ncols_, stride_;
  std::size_t inserted_ = 0;
  std::vector<Entry> basis_;
  std::vector<int> pivot_owner_;  // column -> basis index, -1 if free
};

// Some nonzero v with sum_r v_r * row_r = 0, or nullopt when the rows are
// linearly independent. Deterministic: the dependency closed by the first
// row (in order) that falls in the span of its predecessors.
std::optional<BitSeq> kernel_vector(const F2Matrix& m);

}  // namespace seqcx

#endif  // SEQCX_F2ALGEBRA_HPP_
