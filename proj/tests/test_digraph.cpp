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

#include <catch2/catch_amalgamated.hpp>

#include <queue>

#include "primdeg/primdeg.hpp"
#include "support/brute_force.hpp"

using namespace primdeg;

namespace {

std::vector<Index> walk(std::initializer_list<Index> one_based) {
  std::vector<Index> w;
  for (Index v : one_based) w.push_back(v - 1);
  return w;
}

/// Random walk of `len` edges along the digraph of M(A), or empty if stuck.
std::vector<Index> random_walk(const PatternMatrix &m, std::size_t len, SplitMix64 &rng) {
  const PatternMatrix cols = m.transposed();
  std::vector<Index> w{static_cast<Index>(rng.next() % m.dim())};
  for (std::size_t k = 0; k < len; ++k) {
    const auto out = cols.row(w.back()).members();
    if (out.empty()) return {};
    w.push_back(out[rng.next() % out.size()]);
  }
  return w;
}

} // namespace

TEST_CASE("necessary_conditions", "[digraph]") {
  SECTION("identity lift: column with only the diagonal") {
    const auto v = necessary_conditions(lift_matrix(PatternMatrix::identity(3), 3));
    REQUIRE(v);
    CHECK(v->kind == Violation::Kind::DiagonalOnlyColumn);
    CHECK(v->index == std::optional<Index>{0});
  }
  SECTION("cyclic lift: every column has one entry") {
    const auto v = necessary_conditions(lift_matrix(cyclic_permutation(4), 3));
    REQUIRE(v);
    CHECK(v->kind == Violation::Kind::SingleEntryColumns);
  }
  SECTION("Wielandt passes") {
    for (std::size_t n = 2; n <= 8; ++n) CHECK_FALSE(necessary_conditions(wielandt_tensor(n, 3)));
  }
  SECTION("empty tensor row") {
    // M(A) = Wielandt(3) pattern from rows 1..3, but a 4th index with no entry
    TensorBuilder b(3, 4);
    b.add({0, 1, 1}).add({0, 2, 2}).add({1, 0, 0}).add({2, 3, 3}).add({0, 3, 3});
    b.add({1, 2, 2}).add({2, 1, 1});
    const auto v = necessary_conditions(std::move(b).build());
    REQUIRE(v);
    CHECK(v->kind == Violation::Kind::EmptyRow);
    CHECK(v->index == std::optional<Index>{3});
  }
  SECTION("n = 1 has nothing to check") {
    CHECK_FALSE(necessary_conditions(Tensor(2, 1)));
  }
}

TEST_CASE("verify_walk", "[digraph]") {
  const Tensor w3 = wielandt_tensor(3, 3);
  CHECK(verify_walk(w3, walk({1, 2, 3, 1})));
  CHECK_FALSE(verify_walk(w3, walk({1, 3})));
  CHECK_FALSE(verify_walk(w3, walk({1, 1})));
  const Tensor ones = all_ones_tensor(3, 3);
  for (Index j = 0; j < 3; ++j) CHECK(verify_walk(ones, std::vector<Index>{j, j}));
  CHECK_THROWS_AS(verify_walk(w3, walk({1, 4})), std::out_of_range);
  CHECK_THROWS_AS(verify_walk(w3, walk({1})), std::invalid_argument);
}

TEST_CASE("walk_positivity_check", "[digraph]") {
  const Tensor w3 = wielandt_tensor(3, 3);
  CHECK(walk_positivity_check(w3, walk({1, 2, 3})));
  CHECK(power_pattern(w3, 2).test(2, 0));
  CHECK(walk_positivity_check(w3, walk({2, 1})));
  CHECK_THROWS_AS(walk_positivity_check(w3, walk({1, 3})), std::invalid_argument);

  SplitMix64 rng(2024);
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const Tensor a = random_tensor(n, 2 + seed % 3, 0.3, seed);
    const PatternMatrix m = majorization(a);
    for (int trial = 0; trial < 3; ++trial) {
      const auto w = random_walk(m, 1 + rng.next() % (2 * n), rng);
      if (w.empty()) continue;
      REQUIRE(verify_walk(a, w));
      CHECK(walk_positivity_check(a, w));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("short_cycles_and_H", "[digraph]") {
  SECTION("Wielandt n=3") {
    const CycleInfo c = short_cycles_and_H(wielandt_tensor(3, 3));
    CHECK(c.H == PatternVector::of(3, {0, 1}));
    CHECK(c.s == 2);
    CHECK(c.H == testing::short_cycle_vertices(c.adjacency, 2));
    CHECK(c.cycle_length[0] == std::optional<std::size_t>{2});
    CHECK_FALSE(c.cycle_length[2]);
    REQUIRE(c.short_cycles.size() == 1);
    CHECK(c.short_cycles[0] == std::vector<Index>{0, 1});
  }
  SECTION("all-ones lift: every vertex has a loop") {
    const CycleInfo c = short_cycles_and_H(lift_matrix(PatternMatrix::full(5), 3));
    CHECK(c.H.all());
    CHECK(c.s == 5);
    CHECK(c.short_cycles.size() == 5);
    for (const auto &cy : c.short_cycles) CHECK(cy.size() == 1);
  }
  SECTION("cyclic permutation: only an n-cycle") {
    for (std::size_t n = 2; n <= 6; ++n) {
      const CycleInfo c = short_cycles_and_H(lift_matrix(cyclic_permutation(n), 3));
      CHECK(c.H.none());
      CHECK(c.s == 0);
      CHECK(c.short_cycles.empty());
    }
  }
  SECTION("closed-walk H equals simple-cycle H for n <= 7") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
      const std::size_t n = 2 + seed % 6;
      const Tensor a = random_tensor(n, 2, 0.1 + 0.05 * (seed % 8), seed);
      const CycleInfo c = short_cycles_and_H(a);
      CHECK(c.H == testing::short_cycle_vertices(c.adjacency, n - 1));
      for (const auto &cy : c.short_cycles) {
        std::vector<Index> closed = cy;
        closed.push_back(cy.front());
        CHECK(verify_walk(c.adjacency, closed));
        CHECK(cy.size() <= n - 1);
        std::set<Index> distinct(cy.begin(), cy.end());
        CHECK(distinct.size() == cy.size());
      }
      // H is the union of listed cycles
      PatternVector u(n);
      for (const auto &cy : c.short_cycles)
        for (Index v : cy) u.set(v);
      CHECK(u == c.H);
    }
  }
}

TEST_CASE("escape_witness", "[digraph]") {
  SECTION("Wielandt n=3, j=3") {
    const Tensor a = wielandt_tensor(3, 3);
    const CycleInfo c = short_cycles_and_H(a);
    const EscapeWitness w = escape_witness(a, c, 2);
    CHECK(w.target == 0);
    CHECK(w.length == 1);
    CHECK(w.length <= 3 - c.s);
    CHECK_THROWS_AS(escape_witness(a, c, 0), std::invalid_argument);
  }
  SECTION("empty H is rejected") {
    const Tensor a = lift_matrix(cyclic_permutation(3), 3);
    CHECK_THROWS_AS(escape_witness(a, short_cycles_and_H(a), 0), std::invalid_argument);
  }
  SECTION("unreachable H is a lemma violation") {
    // 1 <-> 2 is a 2-cycle; 3 -> 4 -> 3 is a 2-cycle too, but give vertex 5
    // only an edge into a vertex outside H.
    PatternMatrix m(5);
    m.set(1, 0);
    m.set(0, 1); // 1 <-> 2
    m.set(4, 2); // 3 -> 5
    m.set(2, 4); // 5 -> 3 : 3 and 5 form a 2-cycle, so H = {1,2,3,5}
    m.set(2, 3); // 4 -> 3
    CycleInfo c = short_cycles_and_H(lift_matrix(m, 3));
    REQUIRE_FALSE(c.H.test(3));
    CHECK(escape_witness(c, 3).target == 2);
    // vertex 4 with no out-edge at all
    m.set(2, 3, false);
    c = short_cycles_and_H(lift_matrix(m, 3));
    CHECK_THROWS_AS(escape_witness(c, 3), LemmaViolation);
  }
  SECTION("primitive random instances: witnesses within n - s, BFS oracle") {
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 20000 && checked < 200; ++seed) {
      const std::size_t n = 3 + seed % 5;
      // sparse lifts plus a few off-pattern entries keep H a proper subset
      const PatternMatrix base = majorization(random_tensor(n, 2, 0.25, seed));
      TensorBuilder b(3, n);
      for (Index i = 0; i < n; ++i)
        for (Index j : base.row(i).members()) b.add({i, j, j});
      const Tensor extra = random_tensor(n, 3, 0.05, seed + 77);
      for (std::size_t e = 0; e < extra.nnz(); ++e) b.add(extra.index(e), 1.0);
      const Tensor a = std::move(b).build();
      if (!analyze(a).primitive) continue;
      const CycleInfo c = short_cycles_and_H(a);
      REQUIRE(c.s >= 1);
      for (Index j = 0; j < n; ++j) {
        if (c.H.test(j)) continue;
        const EscapeWitness w = escape_witness(a, c, j);
        ++checked;
        CHECK(c.H.test(w.target));
        CHECK(w.length >= 1);
        CHECK(w.length <= n - c.s);
        CHECK(power_pattern(a, w.length).test(w.target, j));
        // exact-length reachability sets: no H vertex earlier, smallest index at w.length
        PatternVector reach = PatternVector::unit(n, j);
        for (std::size_t l = 1; l <= w.length; ++l) {
          PatternVector next(n);
          for (Index v : reach.members()) next |= c.adjacency.column(v);
          reach = next;
          if (l < w.length) CHECK_FALSE(reach.intersects(c.H));
        }
        CHECK((reach & c.H).members().front() == w.target);
      }
    }
    CHECK(checked >= 100);
  }
}
