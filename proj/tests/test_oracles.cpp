// Copyright 2026 The Multiplicity Authors.
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

#include <random>

#include "doctest.h"
#include "multiplicity/errors.hpp"
#include "multiplicity/oracles.hpp"

using namespace multiplicity;
using namespace multiplicity::oracle;

TEST_CASE("catalan recurrence") {
  const int expected[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n < 8; ++n) CHECK(catalan_recurrence(n) == expected[n]);
}

TEST_CASE("plane spanning trees on convex sets") {
  const int expected[] = {1, 3, 12, 55, 273, 1428, 7752};
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(plane_tree_formula(n) == expected[n - 2]);
    CHECK(plane_trees_by_pruefer(n) == expected[n - 2]);
  }
}

TEST_CASE("tour helpers") {
  // 0-2-4-1-3 on a pentagon: every edge has span two.
  CHECK(min_tour_span({0, 2, 4, 1, 3}, 5) == 2);
  CHECK(min_tour_span({0, 1, 2, 3, 4}, 5) == 1);
  // Hull square: opposite sides are anti-parallel.
  CHECK(has_anti_parallel_pair({0, 1, 2, 3}));
  CHECK_FALSE(has_anti_parallel_pair({0, 2, 4, 1, 3}));
}

TEST_CASE("random generators") {
  std::mt19937_64 rng(1);
  for (int n = 4; n <= 12; ++n) {
    const PointSet gp = random_general_position(n, rng);
    CHECK(gp.size() == n);
    CHECK_FALSE(validate_general_position(gp.points()));
    const PointSet cv = random_convex(n, rng);
    CHECK(convex_hull(cv).size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("closed-form triangulation optima") {
  CHECK(tri_optimum_closed_form(1) == doctest::Approx(8.485281).epsilon(1e-6));
  CHECK(tri_optimum_closed_form(2) == doctest::Approx(8.617739).epsilon(1e-6));
  CHECK(tri_optimum_closed_form(3) == doctest::Approx(8.650615).epsilon(1e-6));
  CHECK(tri_optimum_closed_form(4) == doctest::Approx(8.648491).epsilon(1e-6));
  CHECK_THROWS_AS(tri_optimum_closed_form(5), InvalidInput);
}
