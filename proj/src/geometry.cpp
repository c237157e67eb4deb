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

#include "multiplicity/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "multiplicity/errors.hpp"

namespace multiplicity {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

void check_edge(Edge e, int n) {
  if (e.i == e.j) throw InvalidInput("degenerate edge (" + std::to_string(e.i) + "," +
                                     std::to_string(e.j) + ")");
  if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n || e.i > e.j)
    throw InvalidInput("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                       ") out of range for n=" + std::to_string(n));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw InvalidInput("not a rational literal: \"" + text + "\"");
  BigInt p(num[0] == '+' ? num.substr(1) : num);
  BigInt q(den);
  if (q == 0) throw InvalidInput("zero denominator: \"" + text + "\"");
  return Rational(p, q);
}

std::string format_rational(const Rational& value) {
  const BigInt& q = boost::multiprecision::denominator(value);
  std::string out = boost::multiprecision::numerator(value).str();
  if (q != 1) out += "/" + q.str();
  return out;
}

PointSet PointSet::exact(std::vector<Point> points) {
  if (auto bad = validate_general_position(points)) {
    std::string idx;
    for (int i : bad->indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    throw InvalidInput(bad->indices.size() == 2 ? "coincident points (" + idx + ")"
                                                : "collinear points (" + idx + ")");
  }
  PointSet ps;
  ps.mode_ = PointSetMode::kExact;
  ps.n_ = static_cast<int>(points.size());
  ps.points_ = std::move(points);
  return ps;
}

PointSet PointSet::abstract_convex(int n) {
  if (n < 1) throw InvalidInput("abstract convex set needs n >= 1");
  PointSet ps;
  ps.mode_ = PointSetMode::kAbstractConvex;
  ps.n_ = n;
  return ps;
}

Edge make_edge(int a, int b) {
  if (a == b) throw InvalidInput("degenerate edge (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
  return a < b ? Edge{a, b} : Edge{b, a};
}

int edge_index(int n, Edge e) {
  check_edge(e, n);
  return e.i * n - e.i * (e.i + 1) / 2 + (e.j - e.i - 1);
}

Edge edge_at(int n, int index) {
  if (index < 0 || index >= edge_count(n)) throw InvalidInput("edge index out of range");
  int i = 0;
  while (index >= n - 1 - i) {
    index -= n - 1 - i;
    ++i;
  }
  return Edge{i, i + 1 + index};
}

int orientation(const Point& p, const Point& q, const Point& r) {
  const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return det.sign();
}

Rational squared_distance(const Point& p, const Point& q) {
  const Rational dx = p.x - q.x;
  const Rational dy = p.y - q.y;
  return dx * dx + dy * dy;
}

bool chords_interleave(Edge a, Edge b) {
  if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return false;
  const bool k_inside = a.i < b.i && b.i < a.j;
  const bool l_inside = a.i < b.j && b.j < a.j;
  return k_inside != l_inside;
}

bool segments_cross(Edge a, Edge b, const PointSet& ps) {
  const int n = ps.size();
  check_edge(a, n);
  check_edge(b, n);
  if (a == b) throw InvalidInput("segments_cross needs two distinct edges");
  if (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) return false;
  if (!ps.is_exact()) return chords_interleave(a, b);
  const auto& p = ps.points();
  const int o1 = orientation(p[a.i], p[a.j], p[b.i]);
  const int o2 = orientation(p[a.i], p[a.j], p[b.j]);
  const int o3 = orientation(p[b.i], p[b.j], p[a.i]);
  const int o4 = orientation(p[b.i], p[b.j], p[a.j]);
  if (o1 == 0 && o2 == 0) {
    // Collinear pair: cross iff the projections overlap in more than a point.
    auto key = [](const Point& q) { return std::make_pair(q.x, q.y); };
    auto lo_a = std::min(key(p[a.i]), key(p[a.j]));
    auto hi_a = std::max(key(p[a.i]), key(p[a.j]));
    auto lo_b = std::min(key(p[b.i]), key(p[b.j]));
    auto hi_b = std::max(key(p[b.i]), key(p[b.j]));
    return std::max(lo_a, lo_b) <= std::min(hi_a, hi_b);
  }
  return o1 * o2 <= 0 && o3 * o4 <= 0;
}

std::optional<GeneralPositionViolation> validate_general_position(
    std::span<const Point> points) {
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i] == points[j]) return GeneralPositionViolation{{i, j}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orientation(points[i], points[j], points[k]) == 0)
          return GeneralPositionViolation{{i, j, k}};
  return std::nullopt;
}

int edge_span(int n, Edge e) {
  const int d = e.i > e.j ? e.i - e.j : e.j - e.i;
  return std::min(d, n - d);
}

std::vector<int> convex_hull(const PointSet& ps) {
  const int n = ps.size();
  if (n < 3) throw InvalidInput("convex hull needs at least 3 points");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (!ps.is_exact()) return order;

  const auto& p = ps.points();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return p[a].x != p[b].x ? p[a].x < p[b].x : p[a].y < p[b].y;
  });
  std::vector<int> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && orientation(p[hull[k - 2]], p[hull[k - 1]], p[order[i]]) <= 0) --k;
    hull[k++] = order[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && orientation(p[hull[k - 2]], p[hull[k - 1]], p[order[i]]) <= 0) --k;
    hull[k++] = order[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace multiplicity
