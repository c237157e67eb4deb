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
#include <cmath>
#include <set>

#include <boost/math/constants/constants.hpp>

#include "doctest.h"
#include "multiplicity/constructions.hpp"
#include "multiplicity/errors.hpp"
#include "multiplicity/extremal.hpp"
#include "multiplicity/oracles.hpp"

using namespace multiplicity;

namespace {

double as_double(const Rational& r) { return r.convert_to<double>(); }

Decimal tour_weight(const std::vector<int>& tour, const WeightModel& w) {
  Decimal total = 0;
  for (std::size_t i = 0; i < tour.size(); ++i)
    total += w.weight(make_edge(tour[i], tour[(i + 1) % tour.size()]));
  return total;
}

std::vector<int> tour_classes(const std::vector<int>& tour, const WeightModel& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < tour.size(); ++i)
    out.push_back(w.length_class(edge_index(w.n(), make_edge(tour[i], tour[(i + 1) % tour.size()]))));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("almost convex chains") {
  CHECK(almost_convex_chain(ChainSpec{6, 2, std::nullopt}).size() == 19);
  CHECK(almost_convex_chain(ChainSpec{1, 0, std::nullopt}).size() == 2);
  const PointSet chain = almost_convex_chain(ChainSpec{3, 1, std::nullopt});
  REQUIRE(chain.size() == 7);
  // Vertices see each other above the chain unless both sit on one reflex chain.
  for (int p = 0; p < 7; ++p)
    for (int q = p + 2; q < 7; ++q) {
      const bool same_pocket = p / 2 == (q - 1) / 2;
      if (!same_pocket) REQUIRE(chain_vertices_visible(chain.points(), p, q));
    }
  CHECK_THROWS_AS(almost_convex_chain(ChainSpec{3, 2, Rational(10)}), ConstructionFailure);
  CHECK_THROWS_AS(almost_convex_chain(ChainSpec{0, 1, std::nullopt}), InvalidInput);
}

TEST_CASE("generalized double chains") {
  CHECK(generalized_double_chain(ChainSpec{4, 0, std::nullopt}).size() == 10);
  CHECK(generalized_double_chain(ChainSpec{2, 3, std::nullopt}).size() == 18);
  const PointSet zigzag = generalized_double_chain(ChainSpec{2, 1, std::nullopt});
  REQUIRE(zigzag.size() == 10);
  // Every lower-upper segment avoids every chain edge.
  const int m = 5;
  for (int p = 0; p < m; ++p)
    for (int q = m; q < 2 * m; ++q)
      for (int e = 0; e + 1 < m; ++e) {
        REQUIRE_FALSE(segments_cross(make_edge(p, q), make_edge(e, e + 1), zigzag));
        REQUIRE_FALSE(segments_cross(make_edge(p, q), make_edge(m + e, m + e + 1), zigzag));
      }
}

TEST_CASE("S4 matching gadget geometry") {
  for (int n = 4; n <= 16; n += 2) {
    const PointSet ps = s4_matching_gadget(n);
    REQUIRE(ps.size() == n);
    const int copies = n / 4;
    std::vector<int> left, right;
    for (int c = 0; c < copies; ++c) {
      left.insert(left.end(), {4 * c, 4 * c + 1});
      right.insert(right.end(), {4 * c + 2, 4 * c + 3});
    }
    if (n % 4) {
      left.push_back(n - 2);
      right.push_back(n - 1);
    }
    // Cross edges within a copy are at least 2n long; no cross edge exceeds 2n+1.
    const Rational near = Rational(2 * n) * (2 * n);
    const Rational far = Rational(2 * n + 1) * (2 * n + 1);
    for (int a : left)
      for (int b : right) {
        if (a / 4 == b / 4) REQUIRE(squared_distance(ps[a], ps[b]) >= near);
        REQUIRE(squared_distance(ps[a], ps[b]) <= far);
      }
    for (const auto* side : {&left, &right})
      for (int a : *side)
        for (int b : *side) REQUIRE(squared_distance(ps[a], ps[b]) <= 1);
  }
  CHECK_THROWS_AS(s4_matching_gadget(7), InvalidInput);
  CHECK_THROWS_AS(s4_matching_gadget(2), InvalidInput);
}

TEST_CASE("longest matchings of the S4 gadget join the two sides") {
  for (int n = 4; n <= 12; n += 2) {
    const PointSet ps = s4_matching_gadget(n);
    const auto rep = extremal_multiplicity(ps, GraphClass::kPerfectMatching, Objective::kMax,
                                           CrossingPolicy::kForbidden);
    for (const auto& g : rep.witnesses)
      for (const Edge& e : g.edge_list()) {
        // Left points are a, b (and p); right points c, d (and q).
        const auto side = [&](int v) { return v >= 4 * (n / 4) ? v - 4 * (n / 4) : (v % 4) / 2; };
        REQUIRE(side(e.i) != side(e.j));
      }
  }
}

TEST_CASE("deltoid tour gadget") {
  for (int k = 1; k <= 4; ++k) {
    const TourGadget g = deltoid_tour_gadget(k);
    REQUIRE(g.points.size() == 4 * k + 1);
    REQUIRE(g.tours.size() == (std::size_t{1} << k));
    const WeightModel w = WeightModel::euclidean(g.points);
    const auto classes = tour_classes(g.tours.front(), w);
    std::set<std::vector<int>> distinct;
    for (const auto& t : g.tours) {
      std::vector<int> sorted = t;
      std::sort(sorted.begin(), sorted.end());
      REQUIRE(sorted.size() == static_cast<std::size_t>(g.points.size()));
      REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
      distinct.insert(t);
      REQUIRE(tour_classes(t, w) == classes);
      REQUIRE(abs(tour_weight(t, w) - tour_weight(g.tours.front(), w)) < Decimal("1e-50"));
    }
    CHECK(distinct.size() == g.tours.size());
    // The three farthest points from a_i are its deltoid partners.
    for (int i = 0; i < k; ++i) {
      const int a = 1 + 4 * i;
      std::vector<std::pair<Rational, int>> d;
      for (int v = 0; v < g.points.size(); ++v)
        if (v != a) d.emplace_back(squared_distance(g.points[a], g.points[v]), v);
      std::sort(d.rbegin(), d.rend());
      std::vector<int> top{d[0].second, d[1].second, d[2].second};
      std::sort(top.begin(), top.end());
      REQUIRE(top == std::vector<int>{a + 1, a + 2, a + 3});
    }
  }
  CHECK(deltoid_tour_gadget(3).points.size() == 13);
  // The declared tours are exactly the longest crossing-free tours.
  const TourGadget two = deltoid_tour_gadget(2);
  const auto rep = extremal_multiplicity(two.points, GraphClass::kSpanningCycle, Objective::kMax,
                                         CrossingPolicy::kForbidden);
  std::set<std::vector<Edge>> found, declared;
  for (const auto& g : rep.witnesses) {
    auto edges = g.edge_list();
    std::sort(edges.begin(), edges.end());
    found.insert(edges);
  }
  for (const auto& t : two.tours) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < t.size(); ++i) edges.push_back(make_edge(t[i], t[(i + 1) % t.size()]));
    std::sort(edges.begin(), edges.end());
    declared.insert(edges);
  }
  CHECK(found == declared);
  const TourGadget one = deltoid_tour_gadget(1);
  const auto brute = oracle::brute_force_tours(one.points, WeightModel::euclidean(one.points), true, true);
  CHECK(brute.tours.size() == 2);
  CHECK_THROWS_AS(deltoid_tour_gadget(0), InvalidInput);
  CHECK_THROWS_AS(deltoid_tour_gadget(2, Rational(1)), ConstructionFailure);
}

TEST_CASE("hexagon tour gadget") {
  const TourGadget g = hexagon_tour_gadget(2);
  CHECK(g.points.size() == 13);
  const WeightModel w = WeightModel::euclidean(g.points);
  const Decimal first = tour_weight(g.tours.front(), w);
  for (const auto& t : g.tours) REQUIRE(abs(tour_weight(t, w) - first) < Decimal("1e-50"));
  CHECK(g.tours.size() == 16);
}

TEST_CASE("rotated triangle gadget") {
  CHECK(rotated_triangle_gadget(9).size() == 9);
  CHECK(rotated_triangle_gadget(10).size() == 10);
  const PointSet single = rotated_triangle_gadget(3);
  const auto rep = extremal_multiplicity(single, GraphClass::kSpanningCycle, Objective::kMin,
                                         CrossingPolicy::kAllowed);
  CHECK(rep.multiplicity == 1);
  CHECK_THROWS_AS(rotated_triangle_gadget(2), InvalidInput);
}

TEST_CASE("rational regular polygons") {
  for (int n = 3; n <= 30; ++n) {
    const PointSet ps = convex_polygon(n);
    REQUIRE(convex_hull(ps).size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double angle = 2 * M_PI * (i + 0.25) / n;
      REQUIRE(std::abs(as_double(ps[i].x) - std::cos(angle)) < 1e-6);
      REQUIRE(std::abs(as_double(ps[i].y) - std::sin(angle)) < 1e-6);
    }
  }
  const auto lengths = regular_chord_lengths(10);
  REQUIRE(lengths.size() == 6);
  CHECK(abs(lengths[5] - 2) < Decimal("1e-50"));
  const Decimal pi = boost::math::constants::pi<Decimal>();
  CHECK(abs(lengths[1] - 2 * sin(pi / 10)) < Decimal("1e-50"));
}

TEST_CASE("generated sets are in general position") {
  CHECK_FALSE(validate_general_position(s4_matching_gadget(14).points()));
  CHECK_FALSE(validate_general_position(rotated_triangle_gadget(20).points()));
  CHECK_FALSE(validate_general_position(deltoid_tour_gadget(5).points.points()));
  CHECK_FALSE(validate_general_position(generalized_double_chain(ChainSpec{3, 2, std::nullopt}).points()));
}
