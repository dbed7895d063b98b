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

#ifndef PRIMDEG_TENSOR_HPP
#define PRIMDEG_TENSOR_HPP

/// \file tensor.hpp
/// Sparse nonnegative tensors in coordinate form, the general (Shao) tensor
/// product, tensor powers and the majorization matrix.
///
/// A tensor of order m and dimension n stores only its strictly positive
/// entries, sorted lexicographically by index tuple. Indices are 0-based.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "primdeg/pattern.hpp"

namespace primdeg {

/// Default entry-count limit for materialized products and powers.
inline constexpr std::uint64_t kDefaultMaxEntries = 1'000'000;

/// Thrown when a product or power would exceed the configured entry cap.
class SizeCapExceeded : public std::runtime_error {
public:
  SizeCapExceeded(std::uint64_t estimate, std::uint64_t cap,
                  std::size_t out_order)
      : std::runtime_error(
            "tensor product refused: estimated " + std::to_string(estimate) +
            " entries (order " + std::to_string(out_order) +
            ") exceeds cap " + std::to_string(cap) +
            "; use the pattern engine instead"),
        estimate_(estimate), cap_(cap) {}

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t cap() const noexcept { return cap_; }

private:
  std::uint64_t estimate_;
  std::uint64_t cap_;
};

namespace detail {
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}
inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return (a > std::numeric_limits<std::uint64_t>::max() - b)
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}
inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t e = 0; e < exp; ++e) r = sat_mul(r, base);
  return r;
}
} // namespace detail

class Tensor;

/// Accumulates coordinate entries; duplicates are summed on build().
class TensorBuilder {
public:
  TensorBuilder(std::size_t order, std::size_t dim) : order_(order), dim_(dim) {
    if (order < 2)
      throw std::invalid_argument("tensor order must be >= 2, got " +
                                  std::to_string(order));
    if (dim < 1) throw std::invalid_argument("tensor dim must be >= 1");
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }

  TensorBuilder &add(std::span<const Index> index, double value) {
    if (index.size() != order_) {
      throw std::invalid_argument("entry has " + std::to_string(index.size()) +
                                  " indices, tensor order is " +
                                  std::to_string(order_));
    }
    for (Index i : index) {
      if (i >= dim_) {
        throw std::out_of_range("index " + std::to_string(i + 1) +
                                " out of range [1, " + std::to_string(dim_) +
                                "]");
      }
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw std::invalid_argument("entry value must be positive and finite");
    }
    indices_.insert(indices_.end(), index.begin(), index.end());
    values_.push_back(value);
    return *this;
  }
  TensorBuilder &add(std::initializer_list<Index> index, double value = 1.0) {
    return add(std::span<const Index>(index.begin(), index.size()), value);
  }

  inline Tensor build() &&;

private:
  std::size_t order_;
  std::size_t dim_;
  std::vector<Index> indices_;
  std::vector<double> values_;
};

/// Immutable sparse nonnegative tensor.
class Tensor {
public:
  /// The zero tensor.
  Tensor(std::size_t order, std::size_t dim)
      : Tensor(std::move(TensorBuilder(order, dim)).build()) {}

  std::size_t order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return values_.size(); }

  std::span<const Index> index(std::size_t e) const {
    return {indices_.data() + e * order_, order_};
  }
  double value(std::size_t e) const { return values_[e]; }
  std::span<const double> values() const noexcept { return values_; }

  /// Entry value at `idx`, 0 if absent.
  double at(std::span<const Index> idx) const {
    if (idx.size() != order_) throw std::invalid_argument("Tensor::at: arity");
    std::size_t lo = 0, hi = nnz();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto row = index(mid);
      if (std::lexicographical_compare(row.begin(), row.end(), idx.begin(),
                                       idx.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < nnz() && std::ranges::equal(index(lo), idx)) return values_[lo];
    return 0.0;
  }
  double at(std::initializer_list<Index> idx) const {
    return at(std::span<const Index>(idx.begin(), idx.size()));
  }

  /// Same order, dim and positive-entry positions.
  bool same_pattern(const Tensor &other) const {
    return order_ == other.order_ && dim_ == other.dim_ &&
           indices_ == other.indices_;
  }

  friend bool operator==(const Tensor &, const Tensor &) = default;

private:
  friend class TensorBuilder;
  Tensor(std::size_t order, std::size_t dim, std::vector<Index> idx,
         std::vector<double> vals)
      : order_(order), dim_(dim), indices_(std::move(idx)),
        values_(std::move(vals)) {}

  std::size_t order_;
  std::size_t dim_;
  std::vector<Index> indices_;
  std::vector<double> values_;
};

inline Tensor TensorBuilder::build() && {
  const std::size_t count = values_.size();
  std::vector<std::size_t> perm(count);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  auto tuple = [&](std::size_t e) {
    return std::span<const Index>(indices_.data() + e * order_, order_);
  };
  std::ranges::stable_sort(perm, [&](std::size_t a, std::size_t b) {
    auto ta = tuple(a), tb = tuple(b);
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(),
                                        tb.end());
  });
  std::vector<Index> idx;
  std::vector<double> vals;
  idx.reserve(indices_.size());
  vals.reserve(count);
  for (std::size_t p = 0; p < count; ++p) {
    auto t = tuple(perm[p]);
    if (!vals.empty() &&
        std::ranges::equal(
            t, std::span<const Index>(idx.data() + idx.size() - order_,
                                      order_))) {
      vals.back() += values_[perm[p]];
      continue;
    }
    idx.insert(idx.end(), t.begin(), t.end());
    vals.push_back(values_[perm[p]]);
  }
  return Tensor(order_, dim_, std::move(idx), std::move(vals));
}

/// n x n identity as an order-2 tensor.
inline Tensor identity_tensor(std::size_t n) {
  TensorBuilder b(2, n);
  for (Index i = 0; i < n; ++i) b.add({i, i}, 1.0);
  return std::move(b).build();
}

/// Majorization matrix pattern: (i, j) set iff a_{i j ... j} > 0.
inline PatternMatrix majorization(const Tensor &a) {
  PatternMatrix m(a.dim());
  for (std::size_t e = 0; e < a.nnz(); ++e) {
    auto idx = a.index(e);
    const Index j = idx[1];
    if (std::all_of(idx.begin() + 2, idx.end(),
                    [j](Index t) { return t == j; }))
      m.set(idx[0], j);
  }
  return m;
}

/// Order of the product of an order-m tensor with an order-k tensor.
inline std::size_t product_order(std::size_t m, std::size_t k) {
  return (m - 1) * (k - 1) + 1;
}

/// General tensor product D = A B with
///   d_{i a_1 ... a_{m-1}} = sum a_{i i_2 ... i_m} b_{i_2 a_1} ... b_{i_m a_{m-1}},
/// where each a_t ranges over [n]^{k-1}. Refuses with SizeCapExceeded when
/// min(n^order(D), number of product terms) exceeds `max_entries`.
inline Tensor shao_product(const Tensor &a, const Tensor &b,
                           std::uint64_t max_entries = kDefaultMaxEntries) {
  detail::check_same_dim(a.dim(), b.dim(), "shao_product");
  const std::size_t n = a.dim();
  const std::size_t m = a.order();
  const std::size_t k = b.order();
  const std::size_t out_order = product_order(m, k);

  // B's entries grouped by leading index; entries are sorted, so each group
  // is a contiguous range.
  std::vector<std::size_t> row_begin(n + 1, 0);
  for (std::size_t e = 0; e < b.nnz(); ++e) ++row_begin[b.index(e)[0] + 1];
  for (std::size_t r = 0; r < n; ++r) row_begin[r + 1] += row_begin[r];

  std::uint64_t terms = 0;
  for (std::size_t e = 0; e < a.nnz(); ++e) {
    auto idx = a.index(e);
    std::uint64_t t = 1;
    for (std::size_t p = 1; p < m; ++p)
      t = detail::sat_mul(t, row_begin[idx[p] + 1] - row_begin[idx[p]]);
    terms = detail::sat_add(terms, t);
  }
  const std::uint64_t estimate = std::min(terms, detail::sat_pow(n, out_order));
  if (estimate > max_entries) throw SizeCapExceeded(estimate, max_entries, out_order);

  TensorBuilder out(out_order, n);
  std::vector<Index> tuple(out_order);
  std::vector<std::size_t> choice(m - 1);
  for (std::size_t e = 0; e < a.nnz(); ++e) {
    auto idx = a.index(e);
    bool empty = false;
    for (std::size_t p = 1; p < m; ++p)
      if (row_begin[idx[p]] == row_begin[idx[p] + 1]) empty = true;
    if (empty) continue;
    for (std::size_t p = 1; p < m; ++p) choice[p - 1] = row_begin[idx[p]];
    // Odometer over the cartesian product of B's rows i_2, ..., i_m.
    while (true) {
      tuple[0] = idx[0];
      double v = a.value(e);
      std::size_t pos = 1;
      for (std::size_t p = 0; p + 1 < m; ++p) {
        auto bi = b.index(choice[p]);
        std::copy(bi.begin() + 1, bi.end(), tuple.begin() + pos);
        pos += k - 1;
        v *= b.value(choice[p]);
      }
      out.add(tuple, v);
      std::size_t p = m - 1;
      while (p > 0) {
        --p;
        if (++choice[p] < row_begin[idx[p + 1] + 1]) break;
        choice[p] = row_begin[idx[p + 1]];
        if (p == 0) {
          p = m; // sentinel: odometer wrapped
          break;
        }
      }
      if (p == m) break;
    }
  }
  return std::move(out).build();
}

/// A^r as the left fold A (A^{r-1}).
inline Tensor tensor_power(const Tensor &a, unsigned r,
                           std::uint64_t max_entries = kDefaultMaxEntries) {
  if (r == 0) throw std::invalid_argument("tensor_power: r must be >= 1");
  Tensor p = a;
  for (unsigned k = 2; k <= r; ++k) p = shao_product(a, p, max_entries);
  return p;
}

} // namespace primdeg

#endif // PRIMDEG_TENSOR_HPP
