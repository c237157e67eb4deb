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

#include "multiplicity/convex_tour.hpp"

#include <algorithm>
#include <numeric>

#include "multiplicity/errors.hpp"

namespace multiplicity {

namespace {

Tour make_tour(const std::vector<int>& positions, const std::vector<int>& order,
               const Decimal& weight) {
  const int n = static_cast<int>(order.size());
  Tour t;
  t.weight = weight;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    t.order.push_back(order[positions[i]]);
    const int a = positions[i];
    const int b = positions[(i + 1) % positions.size()];
    t.spans.push_back(edge_span(n, make_edge(a, b)));
  }
  std::sort(t.spans.begin(), t.spans.end());
  return t;
}

}  // namespace

std::vector<int> canonical_cycle(std::vector<int> order) {
  if (order.size() < 3) return order;
  std::rotate(order.begin(), std::min_element(order.begin(), order.end()), order.end());
  if (order[1] > order.back()) std::reverse(order.begin() + 1, order.end());
  return order;
}

std::vector<int> convex_order(const PointSet& ps) {
  const int n = ps.size();
  if (n < 3) throw InvalidInput("convex tours need at least 3 points");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  if (!ps.is_exact()) return idx;
  Point centroid{Rational(0), Rational(0)};
  for (const Point& p : ps.points()) {
    centroid.x += p.x;
    centroid.y += p.y;
  }
  centroid.x /= n;
  centroid.y /= n;
  auto upper = [&](int i) {
    const Rational dy = ps[i].y - centroid.y;
    return dy > 0 || (dy == 0 && ps[i].x > centroid.x);
  };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const bool ua = upper(a), ub = upper(b);
    if (ua != ub) return ua;
    return orientation(centroid, ps[a], ps[b]) > 0;
  });
  for (int i = 0; i < n; ++i)
    if (orientation(ps[idx[i]], ps[idx[(i + 1) % n]], ps[idx[(i + 2) % n]]) <= 0)
      throw InvalidInput("points are not in convex position");
  return idx;
}

LongestTours longest_convex_tours(const PointSet& ps, const WeightModel& weights,
                                  const Decimal& theta) {
  if (weights.n() != ps.size()) throw InvalidInput("weight model size does not match point set");
  const std::vector<int> order = convex_order(ps);
  const int n = static_cast<int>(order.size());
  auto w = [&](int a, int b) -> const Decimal& {
    return weights.weight(make_edge(order[((a % n) + n) % n], order[((b % n) + n) % n]));
  };
  LongestTours out;
  if (n % 2 == 1) {
    const int step = (n - 1) / 2;
    std::vector<int> pos;
    Decimal total = 0;
    for (int i = 0; i < n; ++i) {
      pos.push_back(i * step % n);
      total += w(i * step, (i + 1) * step);
    }
    out.candidates.push_back(make_tour(pos, order, total));
    out.tours = out.candidates;
    return out;
  }

  // n = 2k: a_i = -(i-1)(k-1), b_i = a_i + k; tour a_k..a_1 b_1..b_k.
  const int k = n / 2;
  std::vector<int> base;
  for (int i = k; i >= 1; --i) base.push_back(((-(i - 1) * (k - 1)) % n + n) % n);
  for (int i = 1; i <= k; ++i) base.push_back((((-(i - 1) * (k - 1)) % n + n) % n + k) % n);

  // The base tour is every span-(k-1) chord except two, plus two diameters.
  std::vector<std::pair<int, int>> diameters, present;
  for (int i = 0; i < n; ++i) {
    const int a = base[i], b = base[(i + 1) % n];
    const int span = edge_span(n, make_edge(a, b));
    if (span == k)
      diameters.emplace_back(a, b);
    else
      present.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<int> missing;
  Decimal chords = 0;
  for (int p = 0; p < n; ++p) {
    chords += w(p, p + k - 1);
    const int q = (p + k - 1) % n;
    const std::pair<int, int> key{std::min(p, q), std::max(p, q)};
    if (std::find(present.begin(), present.end(), key) == present.end()) missing.push_back(p);
  }
  if (diameters.size() != 2 || missing.size() != 2)
    throw InvalidInput("internal: unexpected even-tour structure");

  Decimal best = 0;
  for (int s = 0; s < k; ++s) {
    // Shifting by s swaps four edges relative to the full chord sum.
    Decimal total = chords - w(missing[0] + s, missing[0] + s + k - 1) -
                    w(missing[1] + s, missing[1] + s + k - 1) +
                    w(diameters[0].first + s, diameters[0].second + s) +
                    w(diameters[1].first + s, diameters[1].second + s);
    std::vector<int> pos;
    for (int p : base) pos.push_back((p + s) % n);
    out.candidates.push_back(make_tour(pos, order, total));
    if (s == 0 || total > best) best = total;
  }
  const Decimal tol = theta * best;
  for (const Tour& t : out.candidates)
    if (boost::multiprecision::abs(t.weight - best) <= tol) out.tours.push_back(t);
  return out;
}

LongestTours longest_convex_tours(const PointSet& ps) {
  return longest_convex_tours(ps, WeightModel::for_pointset(ps));
}

Tour shortest_convex_tour(const PointSet& ps, const WeightModel& weights) {
  const std::vector<int> order = convex_order(ps);
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 0);
  Decimal total = 0;
  for (int i = 0; i < n; ++i) total += weights.weight(make_edge(order[i], order[(i + 1) % n]));
  return make_tour(pos, order, total);
}

Tour shortest_convex_tour(const PointSet& ps) {
  return shortest_convex_tour(ps, WeightModel::for_pointset(ps));
}

bool is_thrackle(const Tour& tour, const PointSet& ps) {
  const int len = static_cast<int>(tour.order.size());
  std::vector<Edge> edges;
  for (int i = 0; i < len; ++i) edges.push_back(make_edge(tour.order[i], tour.order[(i + 1) % len]));
  for (int a = 0; a < len; ++a)
    for (int b = a + 1; b < len; ++b) {
      const Edge& e = edges[a];
      const Edge& f = edges[b];
      if (e.i == f.i || e.i == f.j || e.j == f.i || e.j == f.j) continue;
      if (!segments_cross(e, f, ps)) return false;
    }
  return true;
}

}  // namespace multiplicity
