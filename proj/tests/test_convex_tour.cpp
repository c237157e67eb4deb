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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "multiplicity/constructions.hpp"
#include "multiplicity/convex_tour.hpp"
#include "multiplicity/errors.hpp"
#include "multiplicity/oracles.hpp"

using namespace multiplicity;

namespace {

std::vector<std::vector<int>> sorted_orders(const std::vector<Tour>& tours) {
  std::vector<std::vector<int>> out;
  for (const Tour& t : tours) out.push_back(canonical_cycle(t.order));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("canonical cycles") {
  CHECK(canonical_cycle({3, 1, 4, 0, 2}) == std::vector<int>{0, 2, 3, 1, 4});
  CHECK(canonical_cycle({2, 0, 1}) == std::vector<int>{0, 1, 2});
  CHECK(canonical_cycle({0, 2, 1}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("longest tours on regular polygons") {
  const int expected[] = {1, 3, 1, 4, 1, 5};
  for (int n = 5; n <= 10; ++n) {
    CAPTURE(n);
    const auto tours = longest_convex_tours(PointSet::abstract_convex(n));
    CHECK(tours.tours.size() == static_cast<std::size_t>(expected[n - 5]));
    CHECK(tours.candidates.size() == static_cast<std::size_t>(n % 2 ? 1 : n / 2));
    for (const Tour& t : tours.tours) {
      REQUIRE(t.order.size() == static_cast<std::size_t>(n));
      REQUIRE(abs(t.weight - tours.tours.front().weight) < Decimal("1e-40"));
    }
  }
  // Odd regular polygons: the tour is the star of longest diagonals.
  const auto seven = longest_convex_tours(PointSet::abstract_convex(7));
  for (int span : seven.tours.front().spans) CHECK(span == 3);
}

TEST_CASE("longest tours agree with brute force") {
  for (int n = 5; n <= 9; ++n) {
    CAPTURE(n);
    const PointSet ps = convex_polygon(n);
    const WeightModel w = WeightModel::euclidean(ps);
    const auto fast = longest_convex_tours(ps, w);
    const auto brute = oracle::brute_force_tours(ps, w, true, false);
    REQUIRE(abs(fast.tours.front().weight - brute.weight) <= default_theta() * brute.weight);
    auto expected = brute.tours;
    std::sort(expected.begin(), expected.end());
    CHECK(sorted_orders(fast.tours) == expected);
  }
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + trial % 6;
    CAPTURE(n);
    const PointSet ps = oracle::random_convex(n, rng);
    const WeightModel w = WeightModel::euclidean(ps);
    const auto fast = longest_convex_tours(ps, w);
    const auto brute = oracle::brute_force_tours(ps, w, true, false);
    REQUIRE(abs(fast.tours.front().weight - brute.weight) <= default_theta() * brute.weight);
    auto expected = brute.tours;
    std::sort(expected.begin(), expected.end());
    CHECK(sorted_orders(fast.tours) == expected);
  }
}

TEST_CASE("brute-force longest tours avoid anti-parallel pairs and short spans") {
  std::mt19937_64 rng(31);
  for (int n = 5; n <= 10; ++n) {
    CAPTURE(n);
    for (const PointSet& ps : {convex_polygon(n), oracle::random_convex(n, rng)}) {
      const auto brute = oracle::brute_force_tours(ps, WeightModel::euclidean(ps), true, false);
      const std::vector<int> order = convex_order(ps);
      std::vector<int> rank(n);
      for (int i = 0; i < n; ++i) rank[order[i]] = i;
      for (const auto& t : brute.tours) {
        std::vector<int> cyclic;
        for (int v : t) cyclic.push_back(rank[v]);
        CHECK_FALSE(oracle::has_anti_parallel_pair(cyclic));
        CHECK(oracle::min_tour_span(cyclic, n) >= (n + 1) / 2 - 1);
      }
    }
  }
}

TEST_CASE("thrackles") {
  const PointSet seven = convex_polygon(7);
  CHECK(is_thrackle(longest_convex_tours(seven).tours.front(), seven));
  const PointSet nine = convex_polygon(9);
  CHECK(is_thrackle(longest_convex_tours(nine).tours.front(), nine));
  const PointSet five = convex_polygon(5);
  CHECK_FALSE(is_thrackle(shortest_convex_tour(five), five));
}

TEST_CASE("shortest convex tour is the hull") {
  const PointSet ps = convex_polygon(8);
  const WeightModel w = WeightModel::euclidean(ps);
  const Tour hull = shortest_convex_tour(ps, w);
  const auto brute = oracle::brute_force_tours(ps, w, false, false);
  REQUIRE(brute.tours.size() == 1);
  CHECK(canonical_cycle(hull.order) == brute.tours.front());
  CHECK(abs(hull.weight - brute.weight) < Decimal("1e-40"));
}

TEST_CASE("non-convex input is rejected") {
  std::vector<Point> pts{{Rational(0), Rational(0)}, {Rational(4), Rational(0)},
                         {Rational(4), Rational(4)}, {Rational(0), Rational(4)},
                         {Rational(1), Rational(2)}};
  const PointSet ps = PointSet::exact(pts);
  CHECK_THROWS_AS(longest_convex_tours(ps), InvalidInput);
  CHECK_THROWS_AS(shortest_convex_tour(ps), InvalidInput);
}
