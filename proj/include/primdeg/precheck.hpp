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

#ifndef PRIMDEG_PRECHECK_HPP
#define PRIMDEG_PRECHECK_HPP

/// \file precheck.hpp
/// Cheap necessary conditions for primitivity. A violation certifies that
/// the tensor is not primitive; passing proves nothing.

#include <optional>
#include <string>
#include <string_view>

#include "primdeg/tensor.hpp"

namespace primdeg {

struct Violation {
  enum class Kind {
    /// Some column j of M(A) is zero off the diagonal.
    DiagonalOnlyColumn,
    /// Every column of M(A) has at most one positive entry.
    SingleEntryColumns,
    /// Some leading index u has no positive entry a_{u ...} at all.
    EmptyRow,
  };

  Kind kind;
  std::optional<Index> index; // offending column or row, 0-based
  std::string message;        // 1-based, human readable
};

inline std::string_view kind_name(Violation::Kind k) {
  switch (k) {
  case Violation::Kind::DiagonalOnlyColumn: return "diagonal-only-column";
  case Violation::Kind::SingleEntryColumns: return "single-entry-columns";
  case Violation::Kind::EmptyRow: return "empty-row";
  }
  return "unknown";
}

/// First failing necessary condition, checked in the order: off-diagonal
/// entry in every column, some column with two positive entries, every row
/// of the tensor nonempty. For n = 1 there is nothing to check.
inline std::optional<Violation> necessary_conditions(const Tensor &a) {
  const std::size_t n = a.dim();
  if (n < 2) return std::nullopt;
  const PatternMatrix m = majorization(a);
  const PatternMatrix cols = m.transposed();

  for (Index j = 0; j < n; ++j) {
    PatternVector c = cols.row(j);
    c.set(j, false);
    if (c.none()) {
      return Violation{Violation::Kind::DiagonalOnlyColumn, j,
                       "column " + std::to_string(j + 1) +
                           " of the majorization matrix has no positive "
                           "off-diagonal entry"};
    }
  }

  bool some_double = false;
  for (Index j = 0; j < n && !some_double; ++j)
    some_double = cols.row(j).count() >= 2;
  if (!some_double) {
    return Violation{Violation::Kind::SingleEntryColumns, std::nullopt,
                     "every column of the majorization matrix has at most one "
                     "positive entry"};
  }

  PatternVector seen(n);
  for (std::size_t e = 0; e < a.nnz(); ++e) seen.set(a.index(e)[0]);
  for (Index u = 0; u < n; ++u) {
    if (!seen.test(u)) {
      return Violation{Violation::Kind::EmptyRow, u,
                       "row " + std::to_string(u + 1) +
                           " of the tensor has no positive entry"};
    }
  }
  return std::nullopt;
}

} // namespace primdeg

#endif // PRIMDEG_PRECHECK_HPP
