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

#include "primdeg/primdeg.hpp"
#include "support/brute_force.hpp"

using namespace primdeg;

namespace {

PatternMatrix random_pattern(std::size_t n, double density, std::uint64_t seed) {
  return majorization(random_tensor(n, 2, density, seed));
}

} // namespace

TEST_CASE("step on the all-ones pattern stays all-ones", "[engine]") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const Tensor a = random_tensor(n, 3, 0.3, seed);
    PatternVector rows(n);
    for (std::size_t e = 0; e < a.nnz(); ++e) rows.set(a.index(e)[0]);
    if (!rows.all()) continue;
    CHECK(step(a, PatternMatrix::full(n)) == PatternMatrix::full(n));
  }
}

TEST_CASE("step on a matrix lift is the Boolean product Z(P) Mk", "[engine]") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const PatternMatrix p = random_pattern(n, 0.3, seed);
    const PatternMatrix mk = random_pattern(n, 0.4, seed + 500);
    const Tensor a = lift_matrix(p, 2 + seed % 3);
    CHECK(step(a, mk) == testing::bool_mul(p, mk));
  }
}

TEST_CASE("step agrees with the materialized square for m=3, n=2", "[engine]") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Tensor a = random_tensor(2, 3, 0.5, seed);
    CHECK(step(a, majorization(a)) ==
          testing::majorization_by_lookup(testing::dense_power(a, 2)));
  }
}

TEST_CASE("step rejects mismatched dimensions", "[engine]") {
  CHECK_THROWS_AS(step(random_tensor(3, 3, 1.0, 0), PatternMatrix(2)),
                  std::invalid_argument);
}

TEST_CASE("engine iterates equal M of materialized powers", "[engine][property]") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const Tensor a = random_tensor(n, 3, 0.25 + 0.05 * (seed % 8), seed);
    for (unsigned r = 1; r <= 3; ++r)
      CHECK(power_pattern(a, r) == majorization(tensor_power(a, r)));
  }
}

TEST_CASE("essential_positive", "[engine]") {
  CHECK(essential_positive(all_ones_tensor(3, 4)));
  for (std::size_t n = 2; n <= 6; ++n) CHECK_FALSE(essential_positive(wielandt_tensor(n, 3)));

  // a_{ij...j} > 0 everywhere plus arbitrary extras.
  TensorBuilder b(3, 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) b.add({i, j, j});
  b.add({0, 1, 2}).add({2, 0, 1});
  CHECK(essential_positive(std::move(b).build()));
}

TEST_CASE("analyze on reference instances", "[engine]") {
  SECTION("Wielandt n=3, m=3") {
    const DegreeReport r = analyze(wielandt_tensor(3, 3));
    CHECK(r.primitive);
    REQUIRE(r.gamma);
    CHECK(*r.gamma == 5);
    CHECK(r.bound == 5);
    CHECK(r.steps_run == 5);
    CHECK_FALSE(r.violation);
    // per-column degrees of the Wielandt pattern at n=3
    CHECK(r.gamma_j == std::vector<std::optional<std::uint64_t>>{4, 3, 5});
  }
  SECTION("all-ones") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t m = 2; m <= 4; ++m) {
        const DegreeReport r = analyze(all_ones_tensor(n, m));
        CHECK(r.primitive);
        CHECK(r.gamma == std::optional<std::uint64_t>{1});
        CHECK(r.steps_run == 1);
      }
  }
  SECTION("cyclic permutation lift is not primitive") {
    const DegreeReport r = analyze(lift_matrix(cyclic_permutation(3), 3));
    CHECK_FALSE(r.primitive);
    CHECK_FALSE(r.gamma);
    CHECK(r.steps_run == r.bound);
    for (const auto &g : r.gamma_j) CHECK_FALSE(g);
    REQUIRE(r.violation);
    CHECK(r.violation->kind == Violation::Kind::SingleEntryColumns);
  }
  SECTION("n = 1") {
    const DegreeReport yes = analyze(all_ones_tensor(1, 3));
    CHECK(yes.primitive);
    CHECK(yes.gamma == std::optional<std::uint64_t>{1});
    CHECK(yes.bound == 1);
    const DegreeReport no = analyze(Tensor(3, 1));
    CHECK_FALSE(no.primitive);
    CHECK(no.steps_run == 1);
  }
  SECTION("recorded trace holds every iterate") {
    const Tensor a = wielandt_tensor(4, 3);
    const DegreeReport r = analyze(a, {.record_trace = true});
    REQUIRE(r.trace.size() == r.steps_run);
    for (std::size_t k = 0; k < r.trace.size(); ++k)
      CHECK(r.trace[k] == power_pattern(a, k + 1));
    CHECK(r.trace.back().all());
    CHECK_FALSE(r.trace[r.trace.size() - 2].all());
  }
}

TEST_CASE("regression: random_tensor(3, 3, 0.2, seed 42)", "[engine][regression]") {
  // Column 3 of M(A) is empty for this draw.
  const Tensor a = random_tensor(3, 3, 0.2, 42);
  CHECK(a.nnz() == 6);
  const DegreeReport r = analyze(a);
  CHECK_FALSE(r.primitive);
  REQUIRE(r.violation);
  CHECK(r.violation->kind == Violation::Kind::DiagonalOnlyColumn);
  CHECK(r.violation->index == std::optional<Index>{2});
  CHECK_FALSE(tmap_oracle_degree(a));
}

TEST_CASE("DegreeReport invariants on random tensors", "[engine][property]") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 2 + seed % 5, m = 2 + seed % 3;
    const double density = 0.1 + 0.1 * (seed % 9);
    const Tensor a = random_tensor(n, m, density, seed);
    const DegreeReport r = analyze(a);
    const bool all_present = std::ranges::all_of(r.gamma_j, [](auto &g) { return g.has_value(); });
    CHECK(r.primitive == all_present);
    CHECK(r.bound == (n - 1) * (n - 1) + 1);
    if (r.primitive) {
      std::uint64_t mx = 0;
      for (auto &g : r.gamma_j) mx = std::max(mx, *g);
      CHECK(*r.gamma == mx);
      CHECK(*r.gamma <= r.bound);
      CHECK_FALSE(r.violation);
    }
  }
}

TEST_CASE("primitivity of A and A^a agree", "[engine][property]") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Tensor a = random_tensor(2 + seed % 2, 3, 0.3 + 0.1 * (seed % 5), seed);
    const bool p = analyze(a).primitive;
    for (unsigned pw : {2U, 3U}) CHECK(analyze(tensor_power(a, pw)).primitive == p);
  }
}

TEST_CASE("column_fill_trace", "[engine]") {
  SECTION("all-ones fills at once") {
    const auto t = column_fill_trace(all_ones_tensor(4, 3), 2);
    REQUIRE(t.size() == 1);
    CHECK(t[0].all());
  }
  SECTION("Wielandt n=3, column 1 against materialized powers") {
    const Tensor a = wielandt_tensor(3, 3);
    const auto t = column_fill_trace(a, 0);
    std::vector<PatternVector> expected;
    for (unsigned r = 1; r <= 5; ++r) {
      expected.push_back(majorization(tensor_power(a, r)).column(0));
      if (expected.back().all()) break;
    }
    CHECK(t == expected);
    // frozen: {2}, {1,3}, {1,2}, {1,2,3}
    CHECK(t == std::vector<PatternVector>{PatternVector::of(3, {1}),
                                          PatternVector::of(3, {0, 2}),
                                          PatternVector::of(3, {0, 1}),
                                          PatternVector::full(3)});
  }
  SECTION("cyclic lift stops before the first repeat") {
    const auto t = column_fill_trace(lift_matrix(cyclic_permutation(3), 3), 0);
    CHECK(t.size() == 3);
  }
  SECTION("diagonal-seeded columns grow strictly to the full set") {
    std::size_t seen = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const std::size_t n = 2 + seed % 5;
      const Tensor a = random_tensor(n, 3, 0.2 + 0.1 * (seed % 5), seed);
      if (!analyze(a).primitive) continue;
      const PatternMatrix m = majorization(a);
      for (Index j = 0; j < n; ++j) {
        if (!m.test(j, j)) continue;
        ++seen;
        const auto t = column_fill_trace(a, j);
        CHECK(t.size() <= n - 1);
        CHECK(t.back().all());
        for (std::size_t k = 1; k < t.size(); ++k) {
          CHECK(t[k - 1].subset_of(t[k]));
          CHECK(t[k - 1].count() < t[k].count());
        }
      }
    }
    CHECK(seen > 50);
  }
  CHECK_THROWS_AS(column_fill_trace(all_ones_tensor(3, 3), 3), std::out_of_range);
}
