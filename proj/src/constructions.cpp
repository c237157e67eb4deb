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

#include "multiplicity/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "multiplicity/errors.hpp"

namespace multiplicity {

namespace {

Rational grid(double v, long long scale) {
  return Rational(BigInt(std::llround(v * static_cast<double>(scale))), BigInt(scale));
}

PointSet checked(std::vector<Point> points, const char* what) {
  if (auto bad = validate_general_position(points)) {
    std::string msg = std::string(what) + ": general position violated at";
    for (int i : bad->indices) msg += " " + std::to_string(i);
    throw ConstructionFailure(msg);
  }
  return PointSet::exact(std::move(points));
}

Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
Point perp(const Point& p) { return {-p.y, p.x}; }

// Exact rotation by the angle whose half-angle tangent is u.
Point rotate(const Point& p, const Rational& u) {
  const Rational den = 1 + u * u;
  const Rational c = (1 - u * u) / den;
  const Rational s = 2 * u / den;
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

long double dist(const Point& p, const Point& q) {
  return std::sqrt(squared_distance(p, q).convert_to<long double>());
}

std::vector<Point> chain_points(const ChainSpec& spec) {
  if (spec.r < 1 || spec.k < 0) throw InvalidInput("chain needs r >= 1 and k >= 0");
  const int step = spec.k + 1;
  const int last = spec.r * step;
  const int count = last + 1;
  const Rational c(1, 8 * static_cast<long long>(last) * last);
  const Rational h = spec.flatness.value_or(
      Rational(1, static_cast<long long>(count) * count * count));
  if (h <= 0) throw InvalidInput("flatness must be positive");
  std::vector<Point> out;
  out.reserve(count);
  for (int x = 0; x <= last; ++x) {
    const int x0 = (x / step) * step;
    const int pos = x - x0;
    Rational y;
    if (pos == 0) {
      y = c * (Rational(x) * x - Rational(last) * x);
    } else {
      const Rational t(pos, step);
      y = c * (Rational(2 * x0 + step) * x - Rational(x0) * (x0 + step) - Rational(last) * x) +
          4 * h * t * (1 - t);
    }
    out.push_back({Rational(x), y});
  }
  return out;
}

void check_chain_visibility(const std::vector<Point>& chain, int step) {
  const int count = static_cast<int>(chain.size());
  if (count > 40) return;
  for (int p = 0; p < count; ++p)
    for (int q = p + 2; q < count; ++q) {
      if (p / step == (q - 1) / step) continue;  // same reflex chain
      if (!chain_vertices_visible(chain, p, q))
        throw ConstructionFailure("flatness too large: chain vertices " + std::to_string(p) +
                                  " and " + std::to_string(q) + " do not see each other");
    }
}

bool same_cycle(std::vector<int> a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      std::rotate(a.begin(), a.begin() + 1, a.end());
      if (a == b) return true;
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

bool inside_convex(const std::vector<Point>& poly, const Point& p) {
  int sign = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const int o = orientation(poly[i], poly[(i + 1) % poly.size()], p);
    if (o == 0) return false;
    if (sign == 0) sign = o;
    if (o != sign) return false;
  }
  return true;
}

// The auxiliary set {c_i, x_i} of the longest-tour construction, built in
// floating point and snapped to a 1e-9 grid.
struct Frame {
  std::vector<Point> c;
  std::vector<Point> x;
};

Frame tour_frame(int k) {
  using V = std::array<double, 2>;
  auto sub = [](V a, V b) { return V{a[0] - b[0], a[1] - b[1]}; };
  auto len = [](V a) { return std::hypot(a[0], a[1]); };
  const double alpha = std::numbers::pi / (3.0 * k);
  std::vector<V> c{{0.0, 0.0}};
  std::vector<V> x{{2.0, 0.0}};
  if (k >= 2) x.push_back({2.0 - 1.0 / k, 0.0});
  V dir{-1.0, 0.0};
  for (int i = 0; i + 1 < k; ++i) {
    const V xi = x[i];
    const V xn = x[i + 1];
    dir = {dir[0] * std::cos(alpha) + dir[1] * std::sin(alpha),
           -dir[0] * std::sin(alpha) + dir[1] * std::cos(alpha)};
    const V w = sub(xn, xi);
    const double r1 = len(sub(c[i], xi));
    const double bw = dir[0] * w[0] + dir[1] * w[1];
    const double s1 = -bw + std::sqrt(bw * bw - (w[0] * w[0] + w[1] * w[1]) + r1 * r1);
    const double s2 = len(sub(c[i], xn));
    const double s = 0.5 * (s1 + s2);
    c.push_back({xn[0] + s * dir[0], xn[1] + s * dir[1]});
    if (i + 2 < k) {
      const V cn = c.back();
      const V u = sub(cn, xn);
      const double ul = len(u);
      double step = 1.0 / k;
      for (int tries = 0; tries < 60; ++tries, step *= 0.5) {
        const V cand{xn[0] + step * u[0] / ul, xn[1] + step * u[1] / ul};
        const double own = len(sub(cn, cand));
        bool ok = true;
        for (std::size_t j = 0; j + 1 < c.size(); ++j)
          if (len(sub(c[j], cand)) >= own) ok = false;
        if (ok) {
          x.push_back(cand);
          break;
        }
      }
      if (static_cast<int>(x.size()) != i + 3)
        throw ConstructionFailure("tour frame: no admissible x_" + std::to_string(i + 3));
    }
  }
  Frame f;
  constexpr long long kScale = 1'000'000'000;
  for (const V& p : c) f.c.push_back({grid(p[0], kScale), grid(p[1], kScale)});
  for (const V& p : x) f.x.push_back({grid(p[0], kScale), grid(p[1], kScale)});
  return f;
}

// Builds a gadget with `spokes` circle points around each a_i, centred on
// c_i and spaced by a rotation of about delta/|a_i c_i|.
TourGadget tour_gadget(int k, const Rational& delta, int spokes, const char* what) {
  const Frame frame = tour_frame(k);
  const int per = spokes + 1;
  std::vector<Point> pts{frame.x[0]};
  Point centroid{Rational(0), Rational(0)};
  for (const Point& p : frame.c) centroid = centroid + Rational(1, 2 * k) * p;
  for (const Point& p : frame.x) centroid = centroid + Rational(1, 2 * k) * p;
  for (int i = 0; i < k; ++i) {
    const Point& c = frame.c[i];
    const Point& x = frame.x[i];
    const long double cx = dist(c, x);
    const Rational t = grid(static_cast<double>(delta.convert_to<long double>() / cx), 1'000'000'000'000LL);
    // a_i sits a hair off segment x_i c_i, on the side of the frame's
    // centroid; x_1 would be collinear otherwise.
    const int side = orientation(x, c, centroid) >= 0 ? 1 : -1;
    const Point a = x + t * (c - x) + Rational(side) * (t * t) * perp(c - x);
    // Outermost circle points end up about delta away from c_i.
    const int half = spokes / 2;
    const Rational u = grid(
        static_cast<double>(delta.convert_to<long double>() / (2 * half * dist(a, c))),
        1'000'000'000'000LL);
    pts.push_back(a);
    for (int s = half; s >= -half; --s) {
      Point v = c - a;
      for (int r = 0; r < std::abs(s); ++r) v = rotate(v, s > 0 ? u : Rational(-u));
      pts.push_back(a + v);
    }
  }
  TourGadget g{checked(pts, what), {}, {}};
  const auto& P = g.points;
  for (int i = 0; i < k; ++i)
    for (int s = 0; s < spokes; ++s) g.hull.push_back(1 + i * per + 1 + s);
  g.hull.push_back(0);

  if (!same_cycle(convex_hull(P), g.hull)) {
    // The spokes may have come out clockwise; flip them per group.
    for (int i = 0; i < k; ++i)
      std::reverse(g.hull.begin() + i * spokes, g.hull.begin() + (i + 1) * spokes);
    if (!same_cycle(convex_hull(P), g.hull))
      throw ConstructionFailure(std::string(what) + ": hull differs from the declared order");
  }

  for (int i = 0; i < k; ++i) {
    const int a = 1 + i * per;
    const Rational r2 = squared_distance(P[a], P[a + 1]);
    long double runner_up = 0;
    for (int j = 0; j < P.size(); ++j) {
      if (j >= a && j < a + per) continue;
      const Rational d2 = squared_distance(P[a], P[j]);
      if (d2 >= r2)
        throw ConstructionFailure(std::string(what) + ": point " + std::to_string(j) +
                                  " is as far from a_" + std::to_string(i + 1) +
                                  " as its circle points");
      runner_up = std::max(runner_up, dist(P[a], P[j]));
    }
    const long double margin = std::sqrt(r2.convert_to<long double>()) - runner_up;
    if (margin <= k * delta.convert_to<long double>())
      throw ConstructionFailure(std::string(what) + ": farthest-point margin at a_" +
                                std::to_string(i + 1) + " is below k*delta (" +
                                std::to_string(static_cast<double>(margin)) + ")");
  }

  // Gadget polygons (a_i, circle points) must be interior-disjoint.
  std::vector<std::vector<Point>> polys;
  for (int i = 0; i < k; ++i) {
    std::vector<Point> poly{P[1 + i * per]};
    for (int s = 0; s < spokes; ++s) poly.push_back(P[1 + i * per + 1 + s]);
    polys.push_back(poly);
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      for (const Point& p : polys[j])
        if (inside_convex(polys[i], p))
          throw ConstructionFailure(std::string(what) + ": gadgets " + std::to_string(i + 1) +
                                    " and " + std::to_string(j + 1) + " overlap");
    }

  // Every tour inserts each a_i between two consecutive circle points.
  const int hull_size = static_cast<int>(g.hull.size());
  const int ways = spokes - 1;
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= ways;
  for (long long code = 0; code < total; ++code) {
    std::vector<int> tour;
    long long rest = code;
    int slot = 0;
    for (int pos = 0; pos < hull_size; ++pos) {
      tour.push_back(g.hull[pos]);
      const int group = pos / spokes;
      if (pos == hull_size - 1 || group >= k) continue;
      // One base-`ways` digit of the code per group.
      if (pos % spokes == 0) {
        slot = static_cast<int>(rest % ways);
        rest /= ways;
      }
      if (pos % spokes == slot) tour.push_back(1 + group * per);
    }
    g.tours.push_back(tour);
  }
  return g;
}

// Without an explicit delta, shrink from 1/(50k^2) until the validator
// accepts; the frame's own margins shrink quickly with k.
TourGadget tour_gadget_search(int k, std::optional<Rational> delta, int spokes,
                              const char* what) {
  if (k < 1) throw InvalidInput(std::string(what) + " needs k >= 1");
  if (delta) {
    if (*delta <= 0) throw InvalidInput("delta must be positive");
    return tour_gadget(k, *delta, spokes, what);
  }
  Rational d(1, 50 * k * k);
  for (int attempt = 0;; ++attempt, d /= 4) {
    try {
      return tour_gadget(k, d, spokes, what);
    } catch (const ConstructionFailure&) {
      if (attempt == 10) throw;
    }
  }
}

}  // namespace

bool chain_vertices_visible(const std::vector<Point>& chain, int p, int q) {
  for (int m = p + 1; m < q; ++m)
    if (orientation(chain[p], chain[q], chain[m]) >= 0) return false;
  return true;
}

PointSet almost_convex_chain(const ChainSpec& spec) {
  auto chain = chain_points(spec);
  check_chain_visibility(chain, spec.k + 1);
  return checked(std::move(chain), "almost convex chain");
}

PointSet generalized_double_chain(const ChainSpec& spec) {
  const auto chain = chain_points(spec);
  check_chain_visibility(chain, spec.k + 1);
  const int m = static_cast<int>(chain.size());
  std::vector<Point> pts;
  for (const Point& p : chain) pts.push_back({p.x, -1 - p.y});
  for (const Point& p : chain) pts.push_back({p.x, 1 + p.y});
  PointSet ps = checked(std::move(pts), "double chain");
  if (2 * m <= 40) {
    for (int p = 0; p < m; ++p)
      for (int q = m; q < 2 * m; ++q)
        for (int s = 0; s + 1 < 2 * m; ++s) {
          if (s == m - 1) continue;
          const Edge chord = make_edge(s, s + 1);
          if (segments_cross(make_edge(p, q), chord, ps))
            throw ConstructionFailure("chains not mutually visible: " + std::to_string(p) +
                                      "-" + std::to_string(q) + " crosses chain edge " +
                                      std::to_string(s) + "-" + std::to_string(s + 1));
        }
  }
  return ps;
}

PointSet s4_matching_gadget(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidInput("s4 gadget needs an even n >= 4");
  const int copies = n / 4;
  const Rational eps(1, 4 * static_cast<long long>(n) * n);
  const Rational half(1, 2 * n);
  std::vector<Point> pts;
  for (int j = 0; j < copies; ++j) {
    const Rational dx = eps * (Rational(j) * j + Rational(j) * j * j / (7 * n));
    const Rational y(2 * j, n);
    pts.push_back({dx, y + half});
    pts.push_back({dx, y - half});
    pts.push_back({dx + 2 * n, y});
    pts.push_back({dx + 2 * n + Rational(1, n), y});
  }
  if (n % 4 == 2) {
    const Point p{Rational(1, 3 * n), Rational(2 * copies, n)};
    pts.push_back(p);
    pts.push_back({p.x + 2 * n, p.y});
  }
  PointSet ps = checked(pts, "s4 gadget");
  // The two sides each fit in a unit-diameter disk; cross edges within a
  // copy have length at least 2n and all cross edges at most 2n+1.
  std::vector<int> left, right;
  for (int j = 0; j < copies; ++j) {
    left.insert(left.end(), {4 * j, 4 * j + 1});
    right.insert(right.end(), {4 * j + 2, 4 * j + 3});
  }
  for (const auto* side : {&left, &right})
    for (int a : *side)
      for (int b : *side)
        if (squared_distance(pts[a], pts[b]) > 1)
          throw ConstructionFailure("s4 gadget: a side exceeds unit diameter");
  const Rational far = Rational(2 * n + 1) * (2 * n + 1);
  for (int a : left)
    for (int b : right) {
      const Rational d2 = squared_distance(pts[a], pts[b]);
      if (d2 > far) throw ConstructionFailure("s4 gadget: cross edge longer than 2n+1");
      if (a / 4 == b / 4 && d2 < Rational(4 * n) * n)
        throw ConstructionFailure("s4 gadget: copy edge shorter than 2n");
    }
  return ps;
}

TourGadget deltoid_tour_gadget(int k, std::optional<Rational> delta) {
  return tour_gadget_search(k, delta, 3, "deltoid gadget");
}

TourGadget hexagon_tour_gadget(int k, std::optional<Rational> delta) {
  return tour_gadget_search(k, delta, 5, "hexagon gadget");
}

Point rational_unit_point(double theta) {
  theta = std::remainder(theta, 2 * std::numbers::pi);
  bool flip = false;
  if (std::abs(theta) > std::numbers::pi / 2) {
    theta += theta > 0 ? -std::numbers::pi : std::numbers::pi;
    flip = true;
  }
  const Rational t = grid(std::tan(theta / 2), 1'000'000'000LL);
  const Rational den = 1 + t * t;
  Point p{(1 - t * t) / den, 2 * t / den};
  if (flip) p = {-p.x, -p.y};
  return p;
}

PointSet rotated_triangle_gadget(int n, std::optional<Rational> eps_opt) {
  if (n < 3) throw InvalidInput("rotated triangle gadget needs n >= 3");
  const int groups = n / 3;
  const Rational eps = eps_opt.value_or(Rational(1, static_cast<long long>(n) * n));
  if (eps <= 0) throw InvalidInput("eps must be positive");
  std::vector<Point> anchors;
  for (int i = 0; i < groups; ++i)
    anchors.push_back(rational_unit_point(2 * std::numbers::pi * (i + 0.25) / groups));
  std::vector<Point> pts;
  std::vector<int> group_of;
  for (int i = 0; i < groups; ++i) {
    const Point& a = anchors[i];
    const Point d = groups == 1 ? Point{Rational(1), Rational(0)} : anchors[(i + 1) % groups] - a;
    // Isosceles, apex a, base bc symmetric about the line to the next anchor.
    pts.push_back(a);
    pts.push_back(a + eps * d + (eps / 8) * perp(d));
    pts.push_back(a + eps * d - (eps / 8) * perp(d));
    if (i == groups - 1) {
      if (n % 3 >= 1) pts.push_back(a + (eps / 2) * d + (eps / 5) * perp(d));
      if (n % 3 == 2) pts.push_back(a + (eps / 3) * d - (eps / 7) * perp(d));
    }
    while (group_of.size() < pts.size()) group_of.push_back(i);
  }
  PointSet ps = checked(pts, "rotated triangle gadget");
  if (groups >= 2) {
    // Any tour leaving a group more than once uses at least groups+1 inter-group
    // edges; the contiguous tour is no longer than the bound on the right.
    long double closest = INFINITY;
    std::vector<long double> widest(groups, 0), diam(groups, 0);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const long double d = dist(pts[p], pts[q]);
        if (group_of[p] == group_of[q]) {
          diam[group_of[p]] = std::max(diam[group_of[p]], d);
        } else {
          closest = std::min(closest, d);
          if (group_of[q] == (group_of[p] + 1) % groups)
            widest[group_of[p]] = std::max(widest[group_of[p]], d);
        }
      }
    long double contiguous = 0;
    for (int i = 0; i < groups; ++i) contiguous += widest[i] + 3 * diam[i];
    if ((groups + 1) * closest <= contiguous)
      throw ConstructionFailure("eps too large: shortest tours may leave a group twice");
  }
  return ps;
}

PointSet convex_polygon(int n) {
  if (n < 3) throw InvalidInput("convex polygon needs n >= 3");
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i)
    pts.push_back(rational_unit_point(2 * std::numbers::pi * (i + 0.25) / n));
  PointSet ps = checked(pts, "convex polygon");
  if (static_cast<int>(convex_hull(ps).size()) != n)
    throw ConstructionFailure("convex polygon: points not in convex position");
  return ps;
}

std::vector<Decimal> regular_chord_lengths(int n) {
  if (n < 3) throw InvalidInput("chord table needs n >= 3");
  const Decimal pi = boost::math::constants::pi<Decimal>();
  std::vector<Decimal> out;
  for (int i = 0; i <= n / 2; ++i) out.push_back(2 * boost::multiprecision::sin(pi * i / n));
  return out;
}

}  // namespace multiplicity
