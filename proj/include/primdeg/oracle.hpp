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

#ifndef PRIMDEG_ORACLE_HPP
#define PRIMDEG_ORACLE_HPP

/// \file oracle.hpp
/// Slow reference computations used to validate the propagation engine.
/// None of these go through PropagationKernel.
///
///  - power oracle: materializes A^r with the general product and reads
///    M(A^r) off it;
///  - T-map oracle: iterates x -> (A x)^[1/(m-1)] from every basis vector,
///    on supports (exact) or on actual values;
///  - matrix exponent: classical Boolean powers of a square pattern.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "primdeg/pattern.hpp"
#include "primdeg/tensor.hpp"

namespace primdeg {

/// Power oracle could not materialize A^r within the entry cap.
class OracleRefused : public std::runtime_error {
public:
  OracleRefused(unsigned r, const SizeCapExceeded &cause)
      : std::runtime_error("power oracle: A^" + std::to_string(r) +
                           " is infeasible: " + cause.what()),
        r_(r) {}
  unsigned first_infeasible() const noexcept { return r_; }

private:
  unsigned r_;
};

inline constexpr unsigned kDefaultPowerOracleRmax = 4;

/// Calls `visit(r, A^r)` for r = 1..r_max until it returns false.
/// Throws OracleRefused naming the first r whose power exceeds the cap.
template <typename Visit>
void for_each_power(const Tensor &a, unsigned r_max, std::uint64_t max_entries,
                    Visit &&visit) {
  std::optional<Tensor> p;
  for (unsigned r = 1; r <= r_max; ++r) {
    try {
      p = (r == 1) ? a : shao_product(a, *p, max_entries);
    } catch (const SizeCapExceeded &e) {
      throw OracleRefused(r, e);
    }
    if (!visit(r, *p)) return;
  }
}

/// First r <= r_max with M(A^r) entrywise positive, from materialized powers.
inline std::optional<unsigned>
power_oracle_degree(const Tensor &a, unsigned r_max = kDefaultPowerOracleRmax,
                    std::uint64_t max_entries = kDefaultMaxEntries) {
  std::optional<unsigned> found;
  for_each_power(a, r_max, max_entries, [&](unsigned r, const Tensor &p) {
    if (majorization(p).all()) {
      found = r;
      return false;
    }
    return true;
  });
  return found;
}

/// Support of T_A(x) for any nonnegative x with support `x`: i is present
/// iff some a_{i i_2 ... i_m} > 0 has every i_t in the support.
inline PatternVector tmap_support_step(const Tensor &a, const PatternVector &x) {
  detail::check_same_dim(a.dim(), x.dim(), "tmap_support_step");
  PatternVector out(a.dim());
  for (std::size_t e = 0; e < a.nnz(); ++e) {
    auto idx = a.index(e);
    if (out.test(idx[0])) continue;
    bool inside = true;
    for (std::size_t p = 1; p < idx.size() && inside; ++p) inside = x.test(idx[p]);
    if (inside) out.set(idx[0]);
  }
  return out;
}

/// One past the degree bound.
inline unsigned default_tmap_rmax(std::size_t n) {
  return static_cast<unsigned>((n - 1) * (n - 1) + 2);
}

/// Smallest r <= r_max such that r steps of the support map from every
/// basis vector e_j give the full set. Checking the n basis vectors
/// suffices: every nonzero support contains some e_j and the step is
/// monotone in its input.
inline std::optional<unsigned> tmap_oracle_degree(const Tensor &a,
                                                  std::optional<unsigned> r_max = {}) {
  const std::size_t n = a.dim();
  const unsigned limit = r_max.value_or(default_tmap_rmax(n));
  std::vector<PatternVector> x;
  for (Index j = 0; j < n; ++j) x.push_back(PatternVector::unit(n, j));
  for (unsigned r = 1; r <= limit; ++r) {
    bool all_full = true;
    for (auto &v : x) {
      v = tmap_support_step(a, v);
      all_full = all_full && v.all();
    }
    if (all_full) return r;
  }
  return std::nullopt;
}

/// T_A(x) = (A x)^[1/(m-1)] on values.
inline std::vector<double> tmap_numeric_step(const Tensor &a,
                                             const std::vector<double> &x) {
  if (x.size() != a.dim())
    throw std::invalid_argument("tmap_numeric_step: dimension mismatch");
  std::vector<double> y(a.dim(), 0.0);
  for (std::size_t e = 0; e < a.nnz(); ++e) {
    auto idx = a.index(e);
    double t = a.value(e);
    for (std::size_t p = 1; p < idx.size(); ++p) t *= x[idx[p]];
    y[idx[0]] += t;
  }
  const double root = 1.0 / static_cast<double>(a.order() - 1);
  for (auto &v : y) v = std::pow(v, root);
  return y;
}

inline PatternVector support_of(const std::vector<double> &x) {
  PatternVector s(x.size());
  for (Index i = 0; i < x.size(); ++i)
    if (x[i] > 0.0) s.set(i);
  return s;
}

/// Iterates the numeric T-map and the support map side by side from every
/// e_j for r_max steps. Returns the first (j, r) where the support of the
/// numeric iterate differs from the pattern iterate, 1-based, if any.
/// Iterates are rescaled to max 1 each step, which leaves supports intact.
struct NumericMismatch {
  Index column;
  unsigned step;
};

inline std::optional<NumericMismatch>
tmap_numeric_mismatch(const Tensor &a, std::optional<unsigned> r_max = {}) {
  const std::size_t n = a.dim();
  const unsigned limit = r_max.value_or(default_tmap_rmax(n));
  for (Index j = 0; j < n; ++j) {
    std::vector<double> x(n, 0.0);
    x[j] = 1.0;
    PatternVector s = PatternVector::unit(n, j);
    for (unsigned r = 1; r <= limit; ++r) {
      x = tmap_numeric_step(a, x);
      s = tmap_support_step(a, s);
      const double mx = *std::max_element(x.begin(), x.end());
      if (mx > 0.0)
        for (auto &v : x) v /= mx;
      if (support_of(x) != s) return NumericMismatch{j, r};
    }
  }
  return std::nullopt;
}

/// Smallest r <= (n-1)^2 + 1 with the Boolean power M^r all-positive.
inline std::optional<unsigned> matrix_exponent(const PatternMatrix &m) {
  const std::size_t n = m.dim();
  const unsigned limit = static_cast<unsigned>((n - 1) * (n - 1) + 1);
  PatternMatrix p = m;
  for (unsigned r = 1; r <= limit; ++r) {
    if (r > 1) p = p * m;
    if (p.all()) return r;
  }
  return std::nullopt;
}

} // namespace primdeg

#endif // PRIMDEG_ORACLE_HPP
