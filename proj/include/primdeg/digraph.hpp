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

#ifndef PRIMDEG_DIGRAPH_HPP
#define PRIMDEG_DIGRAPH_HPP

/// \file digraph.hpp
/// The digraph of M(A): an edge j -> u for every positive (M(A))_{uj}.
/// Source is the column index. Every routine here uses that orientation.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "primdeg/engine.hpp"
#include "primdeg/pattern.hpp"
#include "primdeg/precheck.hpp"
#include "primdeg/tensor.hpp"

namespace primdeg {

/// Thrown when a statement that must hold for primitive tensors fails,
/// which means the input is not primitive (or the caller's data is wrong).
class LemmaViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline bool has_edge(const PatternMatrix &m, Index from, Index to) {
  return m.test(to, from);
}

inline void check_vertices(std::span<const Index> walk, std::size_t n) {
  for (Index v : walk) {
    if (v >= n) {
      throw std::out_of_range("vertex " + std::to_string(v + 1) +
                              " out of range [1, " + std::to_string(n) + "]");
    }
  }
}
} // namespace detail

/// True iff (M(A))_{w[k+1], w[k]} > 0 for every consecutive pair.
/// A repeated vertex is a loop and needs a positive diagonal entry.
inline bool verify_walk(const PatternMatrix &m, std::span<const Index> walk) {
  if (walk.size() < 2)
    throw std::invalid_argument("verify_walk: a walk needs at least 2 vertices");
  detail::check_vertices(walk, m.dim());
  for (std::size_t k = 0; k + 1 < walk.size(); ++k)
    if (!detail::has_edge(m, walk[k], walk[k + 1])) return false;
  return true;
}

inline bool verify_walk(const Tensor &a, std::span<const Index> walk) {
  return verify_walk(majorization(a), walk);
}

/// For a walk j_1 -> ... -> j_t of M(A), reports whether entry (j_t, j_1)
/// of Z(M(A^{t-1})) is positive. This always holds; it is a test hook.
inline bool walk_positivity_check(const Tensor &a, std::span<const Index> walk) {
  if (!verify_walk(a, walk))
    throw std::invalid_argument("walk_positivity_check: not a walk of M(A)");
  const PatternMatrix p = power_pattern(a, walk.size() - 1);
  return p.test(walk.back(), walk.front());
}

struct CycleInfo {
  /// Z(M(A)); edge j -> u iff adjacency(u, j).
  PatternMatrix adjacency;
  /// One shortest cycle through each vertex of H, as the vertex sequence
  /// j_1, ..., j_t (the closing edge j_t -> j_1 is implied). Cycles that are
  /// rotations of one another are listed once.
  std::vector<std::vector<Index>> short_cycles;
  /// Vertices lying on a cycle of length <= n - 1.
  PatternVector H;
  std::size_t s = 0;
  /// Shortest cycle length through each vertex, if <= n - 1.
  std::vector<std::optional<std::size_t>> cycle_length;
};

namespace detail {

/// BFS from `src` along out-edges; returns predecessor tree.
inline std::vector<std::optional<Index>> bfs_tree(const PatternMatrix &cols,
                                                  Index src,
                                                  std::vector<std::size_t> &dist) {
  const std::size_t n = cols.dim();
  std::vector<std::optional<Index>> pred(n);
  dist.assign(n, SIZE_MAX);
  std::deque<Index> q{src};
  dist[src] = 0;
  while (!q.empty()) {
    const Index v = q.front();
    q.pop_front();
    for (Index w : cols.row(v).members()) {
      if (dist[w] != SIZE_MAX) continue;
      dist[w] = dist[v] + 1;
      pred[w] = v;
      q.push_back(w);
    }
  }
  return pred;
}

/// Shortest cycle through v, as a vertex list starting at v.
inline std::vector<Index> shortest_cycle_through(const PatternMatrix &cols,
                                                 Index v) {
  if (cols.row(v).test(v)) return {v};
  std::vector<std::size_t> dist;
  auto pred = bfs_tree(cols, v, dist);
  // Best predecessor p of v: an in-neighbour of v with smallest dist.
  std::optional<Index> best;
  for (Index p = 0; p < cols.dim(); ++p)
    if (cols.row(p).test(v) && dist[p] != SIZE_MAX && (!best || dist[p] < dist[*best]))
      best = p;
  if (!best) return {};
  std::vector<Index> path;
  for (std::optional<Index> x = *best; x; x = pred[*x]) path.push_back(*x);
  std::ranges::reverse(path);
  return path;
}

inline std::vector<Index> canonical_rotation(std::vector<Index> c) {
  auto it = std::ranges::min_element(c);
  std::ranges::rotate(c, it);
  return c;
}

} // namespace detail

/// Vertices on cycles of length <= n - 1 of M(A)'s digraph.
///
/// v is in H iff the diagonal entry (v, v) of the Boolean power Z(M(A))^t
/// is set for some t <= n - 1. A closed walk through v always contains a
/// simple cycle through v that is no longer, so this is exact.
inline CycleInfo short_cycles_and_H(const Tensor &a) {
  const std::size_t n = a.dim();
  CycleInfo info;
  info.adjacency = majorization(a);
  info.H = PatternVector(n);
  info.cycle_length.assign(n, std::nullopt);

  if (n >= 2) {
    PatternMatrix p = info.adjacency;
    for (std::size_t t = 1; t + 1 <= n; ++t) {
      if (t > 1) p = info.adjacency * p;
      for (Index v = 0; v < n; ++v) {
        if (!info.cycle_length[v] && p.test(v, v)) {
          info.cycle_length[v] = t;
          info.H.set(v);
        }
      }
    }
  }
  info.s = info.H.count();

  const PatternMatrix cols = info.adjacency.transposed(); // row j = out-edges of j
  std::set<std::vector<Index>> listed;
  for (Index v : info.H.members()) {
    auto c = detail::shortest_cycle_through(cols, v);
    if (c.size() != *info.cycle_length[v]) {
      throw std::logic_error("cycle search disagrees with closed-walk length at vertex " +
                             std::to_string(v + 1));
    }
    if (listed.insert(detail::canonical_rotation(c)).second)
      info.short_cycles.push_back(std::move(c));
  }
  return info;
}

struct EscapeWitness {
  Index target; // vertex of H
  std::size_t length;
};

/// For j outside H, the lexicographically smallest (length, target) with
/// target in H reachable from j by a walk of that length, length <= n - s.
/// Entry (target, j) of Z(M(A^length)) is then positive.
/// Throws LemmaViolation when no such witness exists (A is not primitive).
inline EscapeWitness escape_witness(const CycleInfo &info, Index j) {
  const std::size_t n = info.adjacency.dim();
  if (j >= n) throw std::out_of_range("escape_witness: vertex out of range");
  if (info.H.test(j))
    throw std::invalid_argument("escape_witness: vertex " +
                                std::to_string(j + 1) + " is in H");
  if (info.s == 0) throw std::invalid_argument("escape_witness: H is empty");

  const std::size_t cap = n - info.s;
  const PatternMatrix cols = info.adjacency.transposed();
  std::vector<std::size_t> dist;
  detail::bfs_tree(cols, j, dist);
  std::optional<EscapeWitness> best;
  for (Index i : info.H.members()) {
    if (dist[i] == SIZE_MAX || dist[i] > cap) continue;
    if (!best || dist[i] < best->length) best = EscapeWitness{i, dist[i]};
  }
  if (!best) {
    throw LemmaViolation("no vertex of H is reachable from " +
                         std::to_string(j + 1) + " within " +
                         std::to_string(cap) + " steps");
  }
  return *best;
}

inline EscapeWitness escape_witness(const Tensor &a, const CycleInfo &info,
                                    Index j) {
  detail::check_same_dim(a.dim(), info.adjacency.dim(), "escape_witness");
  return escape_witness(info, j);
}

} // namespace primdeg

#endif // PRIMDEG_DIGRAPH_HPP
