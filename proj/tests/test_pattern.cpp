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

TEST_CASE("PatternVector basics across word boundaries", "[pattern]") {
  for (std::size_t n : {1U, 7U, 64U, 65U, 130U}) {
    PatternVector v(n);
    CHECK(v.none());
    v.set(static_cast<Index>(n - 1));
    CHECK(v.test(static_cast<Index>(n - 1)));
    CHECK(v.count() == 1);
    CHECK(PatternVector::full(n).count() == n);
    CHECK(PatternVector::full(n).all());
    CHECK(v.subset_of(PatternVector::full(n)));
    if (n > 1) CHECK_FALSE(PatternVector::full(n).subset_of(v));
    CHECK_THROWS_AS(v.test(static_cast<Index>(n)), std::out_of_range);
  }
  CHECK(PatternVector::of(70, {3, 65, 1}).members() == std::vector<Index>{1, 3, 65});
}

TEST_CASE("Boolean product matches the triple loop", "[pattern][property]") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 70;
    const PatternMatrix a = majorization(random_tensor(n, 2, 0.05, seed));
    const PatternMatrix b = majorization(random_tensor(n, 2, 0.05, seed + 99));
    CHECK(a * b == testing::bool_mul(a, b));
    CHECK(a.transposed().transposed() == a);
  }
  const PatternMatrix w = wielandt_matrix(4);
  CHECK(boolean_power(w, 3) == w * w * w);
  CHECK(PatternMatrix::identity(4) * w.transposed() == w.transposed());
}
