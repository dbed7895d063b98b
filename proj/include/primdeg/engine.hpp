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

#ifndef PRIMDEG_ENGINE_HPP
#define PRIMDEG_ENGINE_HPP

/// \file engine.hpp
/// Zero-pattern propagation of majorization matrices of tensor powers.
///
/// With P_k = Z(M(A^k)), column j evolves on its own:
///
///     P_{k+1}(u, j) = 1  iff  some a_{u j_2 ... j_m} > 0 has
///                             P_k(j_t, j) = 1 for every t = 2..m.
///
/// So column j of P_{k+1} is obtained from column j of P_k by a single
/// "which rows have an entry whose trailing indices all lie in this set"
/// query. PropagationKernel answers that query; analyze() drives it up to
/// the (n-1)^2 + 1 steps after which a still-unfilled column certifies
/// non-primitivity.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "primdeg/pattern.hpp"
#include "primdeg/precheck.hpp"
#include "primdeg/tensor.hpp"

namespace primdeg {

/// (n - 1)^2 + 1.
inline std::uint64_t degree_bound(std::size_t n) {
  const std::uint64_t d = n == 0 ? 0 : n - 1;
  return d * d + 1;
}

/// Entries of a tensor grouped by leading index, with each entry's trailing
/// indices stored as a bit mask (only set membership matters). Duplicate
/// masks within a row are dropped.
class PropagationKernel {
public:
  explicit PropagationKernel(const Tensor &a)
      : dim_(a.dim()), words_(detail::words_for(a.dim())) {
    std::vector<std::vector<std::vector<detail::Word>>> rows(dim_);
    std::vector<detail::Word> mask(words_);
    for (std::size_t e = 0; e < a.nnz(); ++e) {
      auto idx = a.index(e);
      std::fill(mask.begin(), mask.end(), 0);
      for (std::size_t p = 1; p < idx.size(); ++p)
        mask[idx[p] / detail::kWordBits] |= detail::Word{1}
                                            << (idx[p] % detail::kWordBits);
      rows[idx[0]].push_back(mask);
    }
    row_begin_.assign(dim_ + 1, 0);
    for (std::size_t u = 0; u < dim_; ++u) {
      auto &r = rows[u];
      std::ranges::sort(r);
      r.erase(std::unique(r.begin(), r.end()), r.end());
      for (const auto &mk : r) masks_.insert(masks_.end(), mk.begin(), mk.end());
      row_begin_[u + 1] = row_begin_[u] + r.size();
    }
  }

  std::size_t dim() const noexcept { return dim_; }

  /// Number of distinct trailing-index sets stored for leading index u.
  std::size_t row_size(Index u) const { return row_begin_[u + 1] - row_begin_[u]; }

  /// Support of A x for any nonnegative x with support `s`:
  /// u is set iff some trailing set of row u is a subset of `s`.
  PatternVector apply(const PatternVector &s) const {
    detail::check_same_dim(s.dim(), dim_, "PropagationKernel::apply");
    const auto sw = s.words();
    PatternVector out(dim_);
    for (Index u = 0; u < dim_; ++u) {
      for (std::size_t r = row_begin_[u]; r < row_begin_[u + 1]; ++r) {
        const detail::Word *mk = masks_.data() + r * words_;
        bool inside = true;
        for (std::size_t w = 0; w < words_ && inside; ++w)
          inside = (mk[w] & ~sw[w]) == 0;
        if (inside) {
          out.set(u);
          break;
        }
      }
    }
    return out;
  }

  /// One propagation step on a matrix stored column-wise: row j of `cols`
  /// is column j of P_k; row j of the result is column j of P_{k+1}.
  PatternMatrix step_columns(const PatternMatrix &cols) const {
    detail::check_same_dim(cols.dim(), dim_, "PropagationKernel::step_columns");
    PatternMatrix next(dim_);
    for (Index j = 0; j < dim_; ++j) next.set_row(j, apply(cols.row(j)));
    return next;
  }

private:
  std::size_t dim_;
  std::size_t words_;
  std::vector<std::size_t> row_begin_;
  std::vector<detail::Word> masks_;
};

/// Z(M(A^{k+1})) from Z(M(A^k)).
inline PatternMatrix step(const PropagationKernel &kernel,
                          const PatternMatrix &mk) {
  detail::check_same_dim(mk.dim(), kernel.dim(), "step");
  return kernel.step_columns(mk.transposed()).transposed();
}

inline PatternMatrix step(const Tensor &a, const PatternMatrix &mk) {
  detail::check_same_dim(mk.dim(), a.dim(), "step");
  return step(PropagationKernel(a), mk);
}

/// Z(M(A^r)) for r >= 1 by r - 1 propagation steps from Z(M(A)).
inline PatternMatrix power_pattern(const Tensor &a, std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("power_pattern: r must be >= 1");
  const PropagationKernel kernel(a);
  PatternMatrix cols = majorization(a).transposed();
  for (std::uint64_t k = 1; k < r; ++k) cols = kernel.step_columns(cols);
  return cols.transposed();
}

/// Every a_{i j ... j} positive.
inline bool essential_positive(const Tensor &a) { return majorization(a).all(); }

struct DegreeReport {
  bool primitive = false;
  std::optional<std::uint64_t> gamma;
  /// First k at which column j of Z(M(A^k)) is all-positive, per column.
  std::vector<std::optional<std::uint64_t>> gamma_j;
  std::uint64_t steps_run = 0;
  std::uint64_t bound = 0;
  std::optional<Violation> violation;
  /// Z(M(A^k)) for k = 1..steps_run; filled only when requested.
  std::vector<PatternMatrix> trace;
};

struct AnalyzeOptions {
  bool record_trace = false;
};

/// Decides primitivity and computes gamma and every gamma_j.
///
/// Iterates from Z(M(A)) until every column is full or (n-1)^2 + 1 steps
/// have run. A column still unfilled at that point proves A is not
/// primitive, since every primitive tensor of dimension n has degree at
/// most (n-1)^2 + 1. Throws std::logic_error if a filled column ever
/// empties again or a precheck violation coexists with a primitive verdict;
/// either would mean a defect in this code.
inline DegreeReport analyze(const Tensor &a, const AnalyzeOptions &opt = {}) {
  const std::size_t n = a.dim();
  DegreeReport rep;
  rep.bound = degree_bound(n);
  rep.violation = necessary_conditions(a);
  rep.gamma_j.assign(n, std::nullopt);

  const PropagationKernel kernel(a);
  PatternMatrix cols = majorization(a).transposed();
  std::size_t filled = 0;
  std::uint64_t k = 1;
  while (true) {
    rep.steps_run = k;
    if (opt.record_trace) rep.trace.push_back(cols.transposed());
    for (Index j = 0; j < n; ++j) {
      const bool full = cols.row(j).all();
      if (rep.gamma_j[j]) {
        if (!full) {
          throw std::logic_error("column " + std::to_string(j + 1) +
                                 " lost full positivity at step " +
                                 std::to_string(k));
        }
      } else if (full) {
        rep.gamma_j[j] = k;
        ++filled;
      }
    }
    if (filled == n || k >= rep.bound) break;
    cols = kernel.step_columns(cols);
    ++k;
  }

  rep.primitive = filled == n;
  if (rep.primitive) {
    std::uint64_t g = 0;
    for (const auto &gj : rep.gamma_j) g = std::max(g, *gj);
    rep.gamma = g;
    if (rep.violation) {
      throw std::logic_error("precheck violation on a primitive tensor: " +
                             rep.violation->message);
    }
  }
  return rep;
}

/// Supports S_1, S_2, ... of column j of Z(M(A^k)).
///
/// Stops at the first full set (included), just before the first set that
/// repeats an earlier one, or after (n-1)^2 + 1 sets. When the diagonal
/// entry (j, j) of M(A) is positive the sets must be nested; a violation
/// throws std::logic_error.
inline std::vector<PatternVector> column_fill_trace(const Tensor &a, Index j) {
  const std::size_t n = a.dim();
  if (j >= n) {
    throw std::out_of_range("column_fill_trace: column " +
                            std::to_string(j + 1) + " out of range [1, " +
                            std::to_string(n) + "]");
  }
  const PropagationKernel kernel(a);
  const std::uint64_t cap = degree_bound(n);
  std::vector<PatternVector> trace;
  std::set<PatternVector> seen;
  PatternVector s = kernel.apply(PatternVector::unit(n, j));
  const bool diagonal = s.test(j);
  while (true) {
    if (!trace.empty() && diagonal && !trace.back().subset_of(s)) {
      throw std::logic_error("column " + std::to_string(j + 1) +
                             " support shrank despite positive diagonal");
    }
    if (!seen.insert(s).second) break;
    trace.push_back(s);
    if (s.all() || trace.size() >= cap) break;
    s = kernel.apply(s);
  }
  return trace;
}

} // namespace primdeg

#endif // PRIMDEG_ENGINE_HPP
