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
#include <numeric>
#include <random>

#include "doctest.h"
#include "multiplicity/combinatorics.hpp"
#include "multiplicity/constructions.hpp"
#include "multiplicity/edge_mask.hpp"
#include "multiplicity/errors.hpp"
#include "multiplicity/geometry.hpp"
#include "multiplicity/oracles.hpp"
#include "multiplicity/pointset_io.hpp"

using namespace multiplicity;

namespace {

Point pt(int x, int y) { return Point{x, y}; }

std::vector<int> rotate_to_min(std::vector<int> v) {
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

TEST_CASE("orientation signs") {
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orientation(pt(0, 0), pt(1, 0), pt(2, 0)) == 0);
  CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
  const Point a{Rational(1, 3), Rational(2, 7)}, b{Rational(-5, 2), Rational(1)},
      c{Rational(4), Rational(-1, 9)};
  CHECK(orientation(a, b, c) == -orientation(a, c, b));
}

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(format_rational(Rational(-10, 4)) == "-5/2");
  CHECK(format_rational(Rational(8, 4)) == "2");
  CHECK_THROWS_AS(parse_rational("1.5"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational(""), InvalidInput);
}

TEST_CASE("segment crossing") {
  const PointSet quad = PointSet::exact({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
  CHECK(segments_cross(make_edge(0, 2), make_edge(1, 3), quad));
  CHECK_FALSE(segments_cross(make_edge(0, 1), make_edge(1, 2), quad));
  const PointSet hex = PointSet::abstract_convex(6);
  CHECK_FALSE(segments_cross(make_edge(0, 3), make_edge(1, 2), hex));
  CHECK(segments_cross(make_edge(0, 3), make_edge(1, 4), hex));
  CHECK_THROWS_AS(make_edge(2, 2), InvalidInput);
}

TEST_CASE("abstract convex crossing agrees with coordinates on the regular polygon") {
  for (int n = 4; n <= 12; ++n) {
    const PointSet exact = convex_polygon(n);
    const PointSet abstract = PointSet::abstract_convex(n);
    const int m = edge_count(n);
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        const Edge e = edge_at(n, a), f = edge_at(n, b);
        REQUIRE(segments_cross(e, f, exact) == segments_cross(e, f, abstract));
      }
  }
}

TEST_CASE("crossing is symmetric on random sets") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const PointSet ps = oracle::random_general_position(8, rng);
    for (int a = 0; a < edge_count(8); ++a)
      for (int b = 0; b < edge_count(8); ++b) {
        if (a == b) continue;
        const Edge e = edge_at(8, a), f = edge_at(8, b);
        REQUIRE(segments_cross(e, f, ps) == segments_cross(f, e, ps));
      }
  }
}

TEST_CASE("general position validation") {
  const std::vector<Point> bad{pt(0, 0), pt(1, 1), pt(2, 2), pt(0, 1)};
  const auto v = validate_general_position(bad);
  REQUIRE(v);
  CHECK(v->indices == std::vector<int>{0, 1, 2});
  const std::vector<Point> twice{pt(0, 0), pt(3, 1), pt(0, 0)};
  REQUIRE(validate_general_position(twice));
  CHECK(validate_general_position(twice)->indices == std::vector<int>{0, 2});
  CHECK_FALSE(validate_general_position(convex_polygon(5).points()));
  CHECK_THROWS_AS(PointSet::exact(bad), InvalidInput);
  CHECK_FALSE(validate_general_position(
      generalized_double_chain(ChainSpec{9, 0, std::nullopt}).points()));
}

TEST_CASE("edge spans and indexing") {
  CHECK(edge_span(10, make_edge(0, 5)) == 5);
  CHECK(edge_span(10, make_edge(0, 9)) == 1);
  CHECK(edge_span(7, make_edge(1, 4)) == 3);
  for (int n = 2; n <= 22; ++n)
    for (int i = 0; i < edge_count(n); ++i) REQUIRE(edge_index(n, edge_at(n, i)) == i);
  CHECK(edge_index(4, make_edge(0, 1)) == 0);
  CHECK(edge_index(4, make_edge(2, 3)) == 5);
}

TEST_CASE("convex hull") {
  const PointSet square = PointSet::exact({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
  CHECK(convex_hull(square) == std::vector<int>{0, 1, 2, 3});
  const PointSet with_center =
      PointSet::exact({pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4), pt(1, 2)});
  CHECK(convex_hull(with_center) == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(convex_hull(PointSet::exact({pt(0, 0), pt(1, 0)})), InvalidInput);

  const TourGadget g = deltoid_tour_gadget(2);
  auto reversed = g.hull;
  std::reverse(reversed.begin(), reversed.end());
  const auto hull = rotate_to_min(convex_hull(g.points));
  CHECK((hull == rotate_to_min(g.hull) || hull == rotate_to_min(reversed)));
  CHECK(g.hull.size() == 7);
}

TEST_CASE("hull is invariant under permutation") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const PointSet ps = oracle::random_general_position(9, rng);
    std::vector<int> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Point> shuffled;
    for (int i : perm) shuffled.push_back(ps[i]);
    std::vector<int> back;
    for (int i : convex_hull(PointSet::exact(shuffled))) back.push_back(perm[i]);
    REQUIRE(rotate_to_min(back) == rotate_to_min(convex_hull(ps)));
  }
}

TEST_CASE("edge masks") {
  EdgeMask m;
  m.set(3);
  m.set(70);
  m.set(200);
  CHECK(m.count() == 3);
  CHECK(m.first() == 3);
  CHECK(m.next(4) == 70);
  m.reset(70);
  CHECK_FALSE(m.test(70));
  CHECK(EdgeMask::first_n(65).count() == 65);
  std::vector<int> seen;
  m.for_each([&](int i) { seen.push_back(i); });
  CHECK(seen == std::vector<int>{3, 200});
}

TEST_CASE("binomials and Catalan numbers") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK(catalan(10) == 16796);
  CHECK(catalan(30) == BigInt("3814986502092304"));
  for (int n = 0; n <= 40; ++n) REQUIRE(catalan(n) == oracle::catalan_recurrence(n));
}

TEST_CASE("point set JSON round trip") {
  const PointSet ps = PointSet::exact(
      {Point{Rational(3, 2), Rational(-1, 5)}, pt(0, 0), pt(7, 3)});
  const PointSet back = pointset_from_json(pointset_to_json(ps));
  CHECK(back.points() == ps.points());
  CHECK(pointset_to_json(ps)["points"][0]["x"] == "3/2");
  const PointSet convex = pointset_from_json(nlohmann::json::parse(R"({"mode":"convex","n":10})"));
  CHECK_FALSE(convex.is_exact());
  CHECK(convex.size() == 10);
  CHECK_THROWS_AS(pointset_from_json(nlohmann::json::parse(R"({"mode":"spiral"})")), InvalidInput);
  CHECK_THROWS_AS(pointset_from_json(nlohmann::json::parse(
                      R"({"mode":"exact","points":[{"x":"0","y":"0"},{"x":"1","y":"1"},{"x":"2","y":"2"}]})")),
                  InvalidInput);
}
