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

#ifndef PRIMDEG_GENERATORS_HPP
#define PRIMDEG_GENERATORS_HPP

/// \file generators.hpp
/// Instance builders: the Wielandt pattern, matrix lifts, and seeded random
/// tensors.
///
/// Random instances use SplitMix64 (Steele, Lea, Flood 2014) so that a given
/// (n, m, density, seed) yields the same tensor on every platform.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "primdeg/engine.hpp"
#include "primdeg/pattern.hpp"
#include "primdeg/tensor.hpp"

namespace primdeg {

/// SplitMix64: 64-bit state, golden-ratio increment, fixed output mix.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Seed for an independent child stream identified by `key`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t key) {
    return mix(mix(seed) ^ mix(key + 0x9e3779b97f4a7c15ULL));
  }

private:
  std::uint64_t state_;
};

/// Wielandt pattern: (1, n-1), (1, n) and the subdiagonal (k+1, k).
/// Primitive with exponent (n-1)^2 + 1.
inline PatternMatrix wielandt_matrix(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("wielandt_matrix: n must be >= 2, got " +
                                std::to_string(n));
  PatternMatrix m(n);
  m.set(0, static_cast<Index>(n - 2));
  m.set(0, static_cast<Index>(n - 1));
  for (Index k = 0; k + 1 < n; ++k) m.set(k + 1, k);
  return m;
}

/// Tensor with a_{i j ... j} = 1 for every set (i, j) of `m`, zero elsewhere.
inline Tensor lift_matrix(const PatternMatrix &m, std::size_t order) {
  TensorBuilder b(order, m.dim());
  std::vector<Index> idx(order);
  for (Index i = 0; i < m.dim(); ++i) {
    for (Index j : m.row(i).members()) {
      idx[0] = i;
      std::fill(idx.begin() + 1, idx.end(), j);
      b.add(idx, 1.0);
    }
  }
  return std::move(b).build();
}

/// Lift of a nonnegative row-major n x n matrix; zeros are dropped.
inline Tensor lift_matrix(std::span<const double> row_major, std::size_t n,
                          std::size_t order) {
  if (row_major.size() != n * n)
    throw std::invalid_argument("lift_matrix: matrix is not n x n");
  TensorBuilder b(order, n);
  std::vector<Index> idx(order);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const double v = row_major[i * n + j];
      if (v < 0.0 || !std::isfinite(v))
        throw std::invalid_argument("lift_matrix: entries must be nonnegative");
      if (v == 0.0) continue;
      idx[0] = i;
      std::fill(idx.begin() + 1, idx.end(), j);
      b.add(idx, v);
    }
  }
  return std::move(b).build();
}

/// True iff a_{i i_2 ... i_m} = 0 whenever the trailing indices differ.
inline bool is_matrix_lift(const Tensor &a) {
  for (std::size_t e = 0; e < a.nnz(); ++e) {
    auto idx = a.index(e);
    for (std::size_t p = 2; p < idx.size(); ++p)
      if (idx[p] != idx[1]) return false;
  }
  return true;
}

inline Tensor wielandt_tensor(std::size_t n, std::size_t order) {
  return lift_matrix(wielandt_matrix(n), order);
}

enum class ValueMode { Ones, Uniform };

/// Upper limit on n^m positions visited by random_tensor.
inline constexpr std::uint64_t kMaxRandomPositions = std::uint64_t{1} << 26;

/// Each of the n^m positions, visited in lexicographic order, is present
/// with probability `density`. Values are 1, or uniform in (0, 1] with
/// ValueMode::Uniform (one extra draw per present entry).
inline Tensor random_tensor(std::size_t n, std::size_t order, double density,
                            std::uint64_t seed,
                            ValueMode values = ValueMode::Ones) {
  if (n < 1) throw std::invalid_argument("random_tensor: n must be >= 1");
  if (order < 2) throw std::invalid_argument("random_tensor: m must be >= 2");
  if (!(density > 0.0 && density <= 1.0))
    throw std::invalid_argument("random_tensor: density must be in (0, 1]");
  const std::uint64_t positions = detail::sat_pow(n, order);
  if (positions > kMaxRandomPositions)
    throw std::invalid_argument("random_tensor: n^m = " +
                                std::to_string(positions) + " positions is too many");

  SplitMix64 rng(seed);
  TensorBuilder b(order, n);
  std::vector<Index> idx(order, 0);
  for (std::uint64_t p = 0; p < positions; ++p) {
    if (rng.uniform() < density) {
      const double v = values == ValueMode::Ones ? 1.0 : 1.0 - rng.uniform();
      b.add(idx, v);
    }
    for (std::size_t q = order; q-- > 0;) {
      if (++idx[q] < n) break;
      idx[q] = 0;
    }
  }
  return std::move(b).build();
}

inline Tensor all_ones_tensor(std::size_t n, std::size_t order) {
  return random_tensor(n, order, 1.0, 0);
}

struct PrimitiveSample {
  Tensor tensor;
  DegreeReport report;
  std::size_t tries;
  std::uint64_t seed; // seed passed to random_tensor for the accepted draw
};

/// Draws random_tensor with seeds derive(seed, 0), derive(seed, 1), ...
/// until one is primitive.
inline PrimitiveSample random_primitive_tensor(std::size_t n, std::size_t order,
                                               double density, std::uint64_t seed,
                                               std::size_t max_tries,
                                               ValueMode values = ValueMode::Ones) {
  for (std::size_t t = 0; t < max_tries; ++t) {
    const std::uint64_t s = SplitMix64::derive(seed, t);
    Tensor a = random_tensor(n, order, density, s, values);
    DegreeReport rep = analyze(a);
    if (rep.primitive) return {std::move(a), std::move(rep), t + 1, s};
  }
  throw std::runtime_error(
      "random_primitive_tensor: no primitive instance in " +
      std::to_string(max_tries) + " tries (n=" + std::to_string(n) +
      ", m=" + std::to_string(order) + ", density=" + std::to_string(density) +
      ", seed=" + std::to_string(seed) + ")");
}

/// Cyclic permutation pattern with edges j -> j+1 (mod n), i.e. positive
/// entries (j+1 mod n, j).
inline PatternMatrix cyclic_permutation(std::size_t n) {
  PatternMatrix m(n);
  for (Index j = 0; j < n; ++j) m.set(static_cast<Index>((j + 1) % n), j);
  return m;
}

} // namespace primdeg

#endif // PRIMDEG_GENERATORS_HPP
