// Copyright 2026 The primdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIMDEG_PATTERN_HPP
#define PRIMDEG_PATTERN_HPP

/// \file pattern.hpp
/// Bit-packed Boolean vectors and square matrices. These hold zero patterns:
/// a set bit means "positive", a clear bit means "zero".

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace primdeg {

using Index = std::uint32_t;

namespace detail {
using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

inline void check_same_dim(std::size_t a, std::size_t b, const char *what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}
} // namespace detail

/// Boolean n-vector, one bit per index. Bits past `dim()` are always zero.
class PatternVector {
public:
  PatternVector() = default;
  explicit PatternVector(std::size_t dim)
      : dim_(dim), words_(detail::words_for(dim), 0) {}

  static PatternVector full(std::size_t dim) {
    PatternVector v(dim);
    std::fill(v.words_.begin(), v.words_.end(), ~detail::Word{0});
    v.clear_tail();
    return v;
  }

  static PatternVector unit(std::size_t dim, Index i) {
    PatternVector v(dim);
    v.set(i);
    return v;
  }

  static PatternVector of(std::size_t dim, std::initializer_list<Index> idx) {
    PatternVector v(dim);
    for (Index i : idx) v.set(i);
    return v;
  }

  std::size_t dim() const noexcept { return dim_; }

  bool test(Index i) const {
    check(i);
    return (words_[i / detail::kWordBits] >> (i % detail::kWordBits)) & 1U;
  }
  void set(Index i, bool on = true) {
    check(i);
    const detail::Word mask = detail::Word{1} << (i % detail::kWordBits);
    if (on)
      words_[i / detail::kWordBits] |= mask;
    else
      words_[i / detail::kWordBits] &= ~mask;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept { return count() == 0; }
  bool all() const noexcept { return count() == dim_; }

  /// True iff every set bit of *this is also set in `other`.
  bool subset_of(const PatternVector &other) const {
    detail::check_same_dim(dim_, other.dim_, "PatternVector::subset_of");
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  PatternVector &operator|=(const PatternVector &other) {
    detail::check_same_dim(dim_, other.dim_, "PatternVector::operator|=");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }
  PatternVector &operator&=(const PatternVector &other) {
    detail::check_same_dim(dim_, other.dim_, "PatternVector::operator&=");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  friend PatternVector operator|(PatternVector a, const PatternVector &b) {
    return a |= b;
  }
  friend PatternVector operator&(PatternVector a, const PatternVector &b) {
    return a &= b;
  }

  bool intersects(const PatternVector &other) const {
    detail::check_same_dim(dim_, other.dim_, "PatternVector::intersects");
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  /// Set indices in increasing order.
  std::vector<Index> members() const {
    std::vector<Index> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      detail::Word bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        out.push_back(static_cast<Index>(w * detail::kWordBits + b));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::span<const detail::Word> words() const noexcept { return words_; }

  friend bool operator==(const PatternVector &, const PatternVector &) = default;
  friend auto operator<=>(const PatternVector &a, const PatternVector &b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

private:
  void check(Index i) const {
    if (i >= dim_) {
      throw std::out_of_range("PatternVector: index " + std::to_string(i) +
                              " out of range for dim " + std::to_string(dim_));
    }
  }
  void clear_tail() {
    const std::size_t rem = dim_ % detail::kWordBits;
    if (rem != 0 && !words_.empty())
      words_.back() &= (detail::Word{1} << rem) - 1;
  }

  std::size_t dim_ = 0;
  std::vector<detail::Word> words_;
};

/// Square n x n Boolean matrix stored as bit-packed rows. Entry (i, j) set
/// means "positive".
class PatternMatrix {
public:
  PatternMatrix() = default;
  explicit PatternMatrix(std::size_t dim)
      : dim_(dim), rows_(dim, PatternVector(dim)) {}

  static PatternMatrix identity(std::size_t dim) {
    PatternMatrix m(dim);
    for (Index i = 0; i < dim; ++i) m.set(i, i);
    return m;
  }
  static PatternMatrix full(std::size_t dim) {
    PatternMatrix m(dim);
    for (auto &r : m.rows_) r = PatternVector::full(dim);
    return m;
  }
  /// Positive entries given as 0-based (row, col) pairs.
  static PatternMatrix
  of(std::size_t dim, std::initializer_list<std::pair<Index, Index>> entries) {
    PatternMatrix m(dim);
    for (auto [i, j] : entries) m.set(i, j);
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }

  bool test(Index i, Index j) const { return row_ref(i).test(j); }
  void set(Index i, Index j, bool on = true) { row_mut(i).set(j, on); }

  const PatternVector &row(Index i) const { return row_ref(i); }
  void set_row(Index i, PatternVector r) {
    detail::check_same_dim(r.dim(), dim_, "PatternMatrix::set_row");
    row_mut(i) = std::move(r);
  }

  PatternVector column(Index j) const {
    PatternVector c(dim_);
    for (Index i = 0; i < dim_; ++i)
      if (rows_[i].test(j)) c.set(i);
    return c;
  }
  void set_column(Index j, const PatternVector &c) {
    detail::check_same_dim(c.dim(), dim_, "PatternMatrix::set_column");
    for (Index i = 0; i < dim_; ++i) rows_[i].set(j, c.test(i));
  }

  bool column_full(Index j) const {
    for (const auto &r : rows_)
      if (!r.test(j)) return false;
    return true;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (const auto &r : rows_) c += r.count();
    return c;
  }
  bool all() const noexcept { return count() == dim_ * dim_; }

  PatternMatrix transposed() const {
    PatternMatrix t(dim_);
    for (Index i = 0; i < dim_; ++i)
      for (Index j : rows_[i].members()) t.set(j, i);
    return t;
  }

  /// Boolean semiring product: (A*B)(i,j) = OR_k A(i,k) AND B(k,j).
  /// Row i of the result is the union of the rows of B selected by row i of A.
  friend PatternMatrix operator*(const PatternMatrix &a,
                                 const PatternMatrix &b) {
    detail::check_same_dim(a.dim_, b.dim_, "PatternMatrix::operator*");
    PatternMatrix c(a.dim_);
    for (Index i = 0; i < a.dim_; ++i) {
      PatternVector acc(a.dim_);
      for (Index k : a.rows_[i].members()) acc |= b.rows_[k];
      c.rows_[i] = std::move(acc);
    }
    return c;
  }

  friend bool operator==(const PatternMatrix &, const PatternMatrix &) = default;

  /// 1-based "(i,j)" list, row-major; used in diagnostics.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (Index i = 0; i < dim_; ++i)
      for (Index j : rows_[i].members()) {
        if (!first) s += ",";
        first = false;
        s += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      }
    return s + "}";
  }

private:
  const PatternVector &row_ref(Index i) const {
    if (i >= dim_) throw std::out_of_range("PatternMatrix: row out of range");
    return rows_[i];
  }
  PatternVector &row_mut(Index i) {
    if (i >= dim_) throw std::out_of_range("PatternMatrix: row out of range");
    return rows_[i];
  }

  std::size_t dim_ = 0;
  std::vector<PatternVector> rows_;
};

/// Boolean power M^r, r >= 1, by repeated left multiplication.
inline PatternMatrix boolean_power(const PatternMatrix &m, unsigned r) {
  if (r == 0) throw std::invalid_argument("boolean_power: r must be >= 1");
  PatternMatrix p = m;
  for (unsigned k = 1; k < r; ++k) p = m * p;
  return p;
}

} // namespace primdeg

#endif // PRIMDEG_PATTERN_HPP
