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

#include "multiplicity/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "multiplicity/constructions.hpp"
#include "multiplicity/enumeration.hpp"
#include "multiplicity/errors.hpp"

namespace multiplicity::oracle {

namespace {

double h2(double q) {
  if (q <= 0 || q >= 1) return 0;
  return -q * std::log2(q) - (1 - q) * std::log2(1 - q);
}

bool interleave(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c != a && c != b && d != a && d != b && c_in != d_in;
}

}  // namespace

BigInt catalan_recurrence(int n) {
  std::vector<BigInt> c{1};
  for (int m = 1; m <= n; ++m) {
    BigInt s = 0;
    for (int i = 0; i < m; ++i) s += c[i] * c[m - 1 - i];
    c.push_back(s);
  }
  return c[n];
}

BigInt plane_tree_formula(int n) {
  if (n < 2) throw InvalidInput("need at least 2 points");
  // C(3n-3, n-1) by the multiplicative formula.
  BigInt num = 1, den = 1;
  for (int i = 1; i <= n - 1; ++i) {
    num *= 3 * n - 3 - (i - 1);
    den *= i;
  }
  return num / den / (2 * n - 1);
}

BigInt plane_trees_by_pruefer(int n) {
  if (n < 2 || n > 8) throw InvalidInput("Pruefer oracle covers 2 <= n <= 8");
  if (n == 2) return 1;
  std::vector<int> seq(n - 2, 0);
  BigInt total = 0;
  while (true) {
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::vector<std::pair<int, int>> edges;
    for (int v : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, v);
      --degree[leaf];
      --degree[v];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    bool plane = true;
    for (std::size_t i = 0; i < edges.size() && plane; ++i)
      for (std::size_t j = i + 1; j < edges.size() && plane; ++j)
        if (interleave(edges[i].first, edges[i].second, edges[j].first, edges[j].second))
          plane = false;
    if (plane) ++total;
    int pos = 0;
    while (pos < n - 2 && ++seq[pos] == n) seq[pos++] = 0;
    if (pos == n - 2) break;
  }
  return total;
}

BigInt middle_region_by_subsets(int m) {
  if (m < 2 || m > 6) throw InvalidInput("middle region oracle covers 2 <= m <= 6");
  // Convex polygon L0..L(m-1), U(m-1)..U0; cross edges join L and U.
  const int n = 2 * m;
  auto pos_lower = [](int i) { return i; };
  auto pos_upper = [&](int j) { return n - 1 - j; };
  std::vector<std::pair<int, int>> cross;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) cross.emplace_back(pos_lower(i), pos_upper(j));
  // A triangulation of the 2m-gon with only cross diagonals uses 2m-3
  // diagonals plus the two end edges L0U0 and L(m-1)U(m-1), 2m-1 cross edges.
  const int need = 2 * m - 1;
  const int total = static_cast<int>(cross.size());
  BigInt count = 0;
  std::vector<int> pick(need);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < need && ok; ++a)
      for (int b = a + 1; b < need && ok; ++b) {
        const auto& e = cross[pick[a]];
        const auto& f = cross[pick[b]];
        if (interleave(e.first, e.second, f.first, f.second)) ok = false;
      }
    if (ok) {
      // Must contain both end edges to close the region.
      bool first = false, last = false;
      for (int a : pick) {
        if (cross[a] == std::pair{pos_lower(0), pos_upper(0)}) first = true;
        if (cross[a] == std::pair{pos_lower(m - 1), pos_upper(m - 1)}) last = true;
      }
      if (first && last) ++count;
    }
    int i = need - 1;
    while (i >= 0 && pick[i] == total - need + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

BigInt bridges_by_subsets(int i, int j) {
  if (i < 1 || j < 1 || i > 4 || j > 4) throw InvalidInput("bridge oracle covers 1 <= i, j <= 4");
  const int n = i + j;
  // Convex order: lower 0..i-1 left to right, then upper right to left.
  std::vector<std::pair<int, int>> cross;
  for (int a = 0; a < i; ++a)
    for (int b = i; b < n; ++b) cross.emplace_back(a, b);
  const int m = static_cast<int>(cross.size());
  BigInt count = 0;
  for (unsigned mask = 0; mask < (1U << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = a + 1; b < m && ok; ++b)
        if ((mask >> b & 1) &&
            interleave(cross[a].first, cross[a].second, cross[b].first, cross[b].second))
          ok = false;
      const int ra = find(cross[a].first), rb = find(cross[a].second);
      if (ra == rb) ok = false;
      parent[ra] = rb;
    }
    if (ok) ++count;
  }
  return count;
}

std::vector<BigInt> chain_reductions_by_subsets(int k) {
  if (k < 0 || k > 5) throw InvalidInput("reduction oracle covers 0 <= k <= 5");
  const int n = k + 2;
  std::vector<std::pair<int, int>> chords;
  for (int p = 0; p < n; ++p)
    for (int q = p + 2; q < n; ++q) chords.emplace_back(p, q);
  const int m = static_cast<int>(chords.size());
  std::vector<BigInt> out(k + 1, 0);
  for (unsigned mask = 0; mask < (1U << m); ++mask) {
    bool ok = true;
    std::vector<bool> covered(n, false);
    for (int a = 0; a < m && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = a + 1; b < m && ok; ++b)
        if ((mask >> b & 1) &&
            interleave(chords[a].first, chords[a].second, chords[b].first, chords[b].second))
          ok = false;
      for (int v = chords[a].first + 1; v < chords[a].second; ++v) covered[v] = true;
    }
    const int r = static_cast<int>(std::count(covered.begin(), covered.end(), true));
    if (ok && std::popcount(mask) == r) ++out[r];
  }
  return out;
}

TourOptimum brute_force_tours(const PointSet& ps, const WeightModel& weights, bool longest,
                              bool non_crossing) {
  const int n = ps.size();
  if (n < 3 || n > 11) throw InvalidInput("tour brute force covers 3 <= n <= 11");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> pool;
  double best = longest ? -1 : 1e300;
  auto edge = [&](int a, int b) { return edge_index(n, make_edge(a, b)); };
  do {
    if (p[1] > p[n - 1]) continue;
    double w = 0;
    for (int i = 0; i < n; ++i) w += weights.approx(edge(p[i], p[(i + 1) % n]));
    const double slack = 1e-9 * std::abs(best);
    if (longest ? w < best - slack : w > best + slack) continue;
    if (non_crossing) {
      bool crossing = false;
      for (int i = 0; i < n && !crossing; ++i)
        for (int j = i + 2; j < n && !crossing; ++j) {
          if (i == 0 && j == n - 1) continue;
          crossing = segments_cross(make_edge(p[i], p[i + 1]), make_edge(p[j], p[(j + 1) % n]), ps);
        }
      if (crossing) continue;
    }
    if (longest ? w > best + slack : w < best - slack) {
      pool.clear();
      best = w;
    } else if (longest ? w > best : w < best) {
      best = w;
    }
    pool.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));

  TourOptimum out;
  std::vector<Decimal> exact;
  for (const auto& t : pool) {
    Decimal w = 0;
    for (int i = 0; i < n; ++i) w += weights.weight(make_edge(t[i], t[(i + 1) % n]));
    exact.push_back(w);
  }
  if (exact.empty()) return out;
  out.weight = longest ? *std::max_element(exact.begin(), exact.end())
                       : *std::min_element(exact.begin(), exact.end());
  const Decimal theta = default_theta() * abs(out.weight);
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (abs(exact[i] - out.weight) <= theta) out.tours.push_back(pool[i]);
  return out;
}

bool has_anti_parallel_pair(const std::vector<int>& tour) {
  const int len = static_cast<int>(tour.size());
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j) {
      if (i == j) continue;
      const int x = tour[i], y = tour[(i + 1) % len];
      const int u = tour[j], v = tour[(j + 1) % len];
      if (x == u || x == v || y == u || y == v) continue;
      if (interleave(x, y, u, v)) continue;  // crossing edges are not disjoint
      if (interleave(x, u, y, v)) return true;
    }
  return false;
}

int min_tour_span(const std::vector<int>& tour, int n) {
  int best = n;
  const int len = static_cast<int>(tour.size());
  for (int i = 0; i < len; ++i) {
    const int d = std::abs(tour[i] - tour[(i + 1) % len]);
    best = std::min(best, std::min(d, n - d));
  }
  return best;
}

PointSet random_general_position(int n, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> coord(0, range - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back(Point{coord(rng), coord(rng)});
    if (!validate_general_position(pts)) return PointSet::exact(std::move(pts));
  }
  throw InvalidInput("could not sample points in general position");
}

PointSet random_convex(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> a(n);
    for (double& v : a) v = angle(rng);
    std::sort(a.begin(), a.end());
    bool spread = true;
    for (int i = 0; i + 1 < n; ++i) spread = spread && a[i + 1] - a[i] > 1e-3;
    if (!spread) continue;
    std::vector<Point> pts;
    for (double v : a) pts.push_back(rational_unit_point(v));
    std::shuffle(pts.begin(), pts.end(), rng);
    return PointSet::exact(pts);
  }
  throw InvalidInput("could not sample a convex point set");
}

double tri_closed_form(int k, const std::vector<double>& alpha) {
  if (k == 1) {
    const double a1 = alpha.at(1);
    return std::sqrt(std::exp2(4 - a1 + h2(a1)) * 3);
  }
  double h = 0;
  for (double a : alpha)
    if (a > 0) h -= a * std::log2(a);
  if (k == 2) return std::cbrt(std::exp2(8 - alpha.at(2) + h));
  if (k == 3) {
    const double e = 8 - alpha[1] - 2 * alpha[2] - 3 * alpha[3] + h;
    return std::pow(5 * std::exp2(e) * std::pow(3, alpha[1]) * std::pow(5, alpha[2]) *
                        std::pow(5, alpha[3]),
                    0.25);
  }
  throw InvalidInput("closed forms cover k = 1, 2, 3");
}

double tri_optimum_closed_form(int k) {
  // Reduction counts a_i for k = 1..4, read off by hand.
  static const std::vector<std::vector<double>> counts = {
      {1, 1}, {1, 2, 2}, {1, 3, 5, 5}, {1, 4, 9, 14, 14}};
  if (k < 1 || k > 4) throw InvalidInput("closed form covers k = 1..4");
  double s = 0;
  for (int i = 0; i <= k; ++i) s += counts[k - 1][i] * std::exp2(-i);
  return std::pow((k + 2) * std::exp2(2.0 * (k + 1)) * s, 1.0 / (k + 1));
}

double st_single_bridge(double a) {
  // alpha_L = alpha_U = a, one bridge type with B = 1 and ij = 1; each side
  // keeps 1 - a/2 vertices.
  const double rho = 2 * h2(a) + a + 2 * (1 - a / 2) * std::log2(27.0 / 4.0);
  return std::exp2(rho / 2);
}

double cf_single_bridge(double a) {
  const double rho = 2 * h2(a) + 2 * (1 - a / 2) * std::log2(8.22469);
  return std::exp2(rho / 2);
}

}  // namespace multiplicity::oracle
