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

#include "multiplicity/enumeration.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <thread>
#include <unordered_set>

#include "multiplicity/combinatorics.hpp"
#include "multiplicity/errors.hpp"

namespace multiplicity {

namespace {

// Recursion depth at which count() splits work between threads.
constexpr int kShardDepth = 6;

struct Shard {
  int index = 0;
  int count = 1;
  long long seen = 0;

  // Subtrees rooted at the shard depth are dealt round-robin.
  bool take(int depth) {
    if (count == 1 || depth != kShardDepth) return true;
    return (seen++ % count) == index;
  }
  // Leaves above the shard depth belong to worker 0.
  bool owns_leaf(int depth) const { return count == 1 || depth >= kShardDepth || index == 0; }
};

struct Components {
  std::array<std::uint8_t, kMaxPoints> label{};
  int count = 0;

  explicit Components(int n) : count(n) {
    for (int i = 0; i < n; ++i) label[i] = static_cast<std::uint8_t>(i);
  }
  bool joins(int u, int v) const { return label[u] != label[v]; }
  void merge(int u, int v, int n) {
    const auto from = label[v];
    const auto to = label[u];
    for (int i = 0; i < n; ++i)
      if (label[i] == from) label[i] = to;
    --count;
  }
};

template <class Emit>
class Search {
 public:
  Search(int n, const CrossingTable& table, const EdgeMask& allowed, Shard shard, Emit& emit)
      : n_(n), table_(table), allowed_(allowed), shard_(shard), emit_(emit) {
    const int m = edge_count(n);
    ends_.resize(m);
    for (int e = 0; e < m; ++e) {
      const Edge edge = edge_at(n, e);
      ends_[e] = {edge.i, edge.j};
    }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) pair_index_[u][v] = u == v ? -1 : edge_index(n, make_edge(u, v));
  }

  // All non-crossing subsets of `order` (AllPlane), or acyclic ones.
  void plane(const std::vector<int>& order, GraphClass cls) {
    order_ = &order;
    cls_ = cls;
    plane_rec(0, EdgeMask{}, EdgeMask{}, Components(n_), 0);
  }

  void triangulations() { tri_rec(allowed_, EdgeMask{}, EdgeMask{}, 0); }

  void matchings() { match_rec(0U, EdgeMask{}, EdgeMask{}, 0); }

  void cycles() {
    if (n_ < 3) return;
    cycle_rec(0, 1U, -1, EdgeMask{}, EdgeMask{}, 0);
  }

 private:
  void plane_rec(int pos, const EdgeMask& included, const EdgeMask& blocked, Components comps,
                 int depth) {
    if (!shard_.take(depth)) return;
    const auto& order = *order_;
    const bool tree = cls_ == GraphClass::kSpanningTree;
    if (tree && comps.count == 1) {
      if (shard_.owns_leaf(depth)) emit_(included);
      return;
    }
    while (pos < static_cast<int>(order.size()) && blocked.test(order[pos])) ++pos;
    if (pos == static_cast<int>(order.size())) {
      if (!tree && shard_.owns_leaf(depth)) emit_(included);
      return;
    }
    const int e = order[pos];
    const auto [u, v] = ends_[e];
    const bool acyclic = cls_ != GraphClass::kAllPlane;
    if (!acyclic || comps.joins(u, v)) {
      EdgeMask inc = included;
      inc.set(e);
      Components next = comps;
      if (acyclic) next.merge(u, v, n_);
      plane_rec(pos + 1, inc, blocked | table_.crossers(e), next, depth + 1);
    }
    if (tree && !still_connectable(pos + 1, blocked, comps)) return;
    plane_rec(pos + 1, included, blocked, comps, depth + 1);
  }

  // Whether the remaining unblocked candidates can still join all components.
  bool still_connectable(int pos, const EdgeMask& blocked, Components comps) const {
    const auto& order = *order_;
    for (int p = pos; p < static_cast<int>(order.size()) && comps.count > 1; ++p) {
      const int e = order[p];
      if (blocked.test(e)) continue;
      const auto [u, v] = ends_[e];
      if (comps.joins(u, v)) comps.merge(u, v, n_);
    }
    return comps.count == 1;
  }

  // avail: undecided candidates compatible with `included`.
  // pending: excluded segments not yet crossed by an included one.
  void tri_rec(const EdgeMask& avail, const EdgeMask& included, EdgeMask pending, int depth) {
    if (!shard_.take(depth)) return;
    bool dead = false;
    pending.for_each([&](int x) {
      if (dead) return;
      if (table_.crossers(x).intersects(included))
        pending.reset(x);
      else if (!table_.crossers(x).intersects(avail))
        dead = true;
    });
    if (dead) return;
    const int e = avail.first();
    if (e < 0) {
      if (shard_.owns_leaf(depth)) emit_(included);
      return;
    }
    EdgeMask rest = avail;
    rest.reset(e);
    EdgeMask inc = included;
    inc.set(e);
    tri_rec(rest.without(table_.crossers(e)), inc, pending, depth + 1);
    if (table_.crossers(e).intersects(rest)) {
      EdgeMask pend = pending;
      pend.set(e);
      tri_rec(rest, included, pend, depth + 1);
    }
  }

  void match_rec(std::uint32_t matched, const EdgeMask& included, const EdgeMask& blocked,
                 int depth) {
    if (!shard_.take(depth)) return;
    int v = 0;
    while (v < n_ && (matched >> v & 1U)) ++v;
    if (v == n_) {
      if (shard_.owns_leaf(depth)) emit_(included);
      return;
    }
    for (int u = v + 1; u < n_; ++u) {
      if (matched >> u & 1U) continue;
      const int e = pair_index_[v][u];
      if (!allowed_.test(e) || blocked.test(e)) continue;
      EdgeMask inc = included;
      inc.set(e);
      match_rec(matched | (1U << v) | (1U << u), inc, blocked | table_.crossers(e), depth + 1);
    }
  }

  // Path from vertex 0 to `end`; `second` is the vertex after 0. Each
  // undirected cycle is produced once, with second < last.
  void cycle_rec(int end, std::uint32_t visited, int second, const EdgeMask& included,
                 const EdgeMask& blocked, int depth) {
    if (!shard_.take(depth)) return;
    const std::uint32_t all = (n_ == 32) ? ~0U : ((1U << n_) - 1);
    if (visited == all) {
      if (second >= end) return;
      const int e = pair_index_[end][0];
      if (!allowed_.test(e) || blocked.test(e)) return;
      if (!shard_.owns_leaf(depth)) return;
      EdgeMask inc = included;
      inc.set(e);
      emit_(inc);
      return;
    }
    for (int u = 1; u < n_; ++u) {
      if (visited >> u & 1U) continue;
      const int e = pair_index_[end][u];
      if (!allowed_.test(e) || blocked.test(e)) continue;
      EdgeMask inc = included;
      inc.set(e);
      cycle_rec(u, visited | (1U << u), second < 0 ? u : second, inc,
                blocked | table_.crossers(e), depth + 1);
    }
  }

  int n_;
  const CrossingTable& table_;
  EdgeMask allowed_;
  Shard shard_;
  Emit& emit_;
  std::vector<std::pair<int, int>> ends_;
  std::array<std::array<int, kMaxPoints>, kMaxPoints> pair_index_{};
  const std::vector<int>* order_ = nullptr;
  GraphClass cls_ = GraphClass::kAllPlane;
};

struct Prepared {
  int n = 0;
  CrossingTable table;
  EdgeMask allowed;
};

int cap_for(GraphClass cls, const EnumerationLimits& limits) {
  return cls == GraphClass::kTriangulation ? limits.max_points_triangulation
                                           : limits.max_points;
}

Prepared prepare(const PointSet& ps, GraphClass cls, const EnumerationOptions& options) {
  const int n = ps.size();
  const int cap = std::min(cap_for(cls, options.limits), kMaxPoints);
  if (n > cap)
    throw LimitExceeded("n=" + std::to_string(n) + " exceeds the enumeration limit " +
                        std::to_string(cap) + " for " + std::string(to_string(cls)));
  if (cls == GraphClass::kPerfectMatching && n % 2 != 0)
    throw InvalidInput("perfect matchings need an even number of points");
  if (options.crossings_allowed &&
      (cls == GraphClass::kTriangulation || cls == GraphClass::kAllPlane))
    throw InvalidInput(std::string(to_string(cls)) + " is only defined for plane graphs");
  if (cls == GraphClass::kTriangulation && n < 3)
    throw InvalidInput("triangulations need at least 3 points");
  EdgeMask universe = EdgeMask::first_n(edge_count(n));
  EdgeMask allowed = options.allowed ? (*options.allowed & universe) : universe;
  return Prepared{n, options.crossings_allowed ? CrossingTable::empty(n) : CrossingTable(ps),
                  allowed};
}

template <class Emit>
void run_search(const Prepared& prep, GraphClass cls, Shard shard, Emit& emit,
                bool factor_free_edges) {
  Search<Emit> search(prep.n, prep.table, prep.allowed, shard, emit);
  switch (cls) {
    case GraphClass::kAllPlane:
    case GraphClass::kForest:
    case GraphClass::kSpanningTree: {
      std::vector<int> order;
      const EdgeMask skip = factor_free_edges ? prep.table.free_edges() : EdgeMask{};
      prep.allowed.for_each([&](int e) {
        if (!skip.test(e)) order.push_back(e);
      });
      search.plane(order, cls);
      break;
    }
    case GraphClass::kTriangulation:
      search.triangulations();
      break;
    case GraphClass::kPerfectMatching:
      search.matchings();
      break;
    case GraphClass::kSpanningCycle:
      search.cycles();
      break;
  }
}

struct Counter {
  unsigned long long value = 0;
  void operator()(const EdgeMask&) { ++value; }
};

std::string lower_dashed(std::string_view s) {
  std::string out;
  for (char c : s) out += c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::kAllPlane: return "all-plane";
    case GraphClass::kForest: return "forest";
    case GraphClass::kPerfectMatching: return "perfect-matching";
    case GraphClass::kSpanningTree: return "spanning-tree";
    case GraphClass::kSpanningCycle: return "spanning-cycle";
    case GraphClass::kTriangulation: return "triangulation";
  }
  return "unknown";
}

GraphClass parse_graph_class(std::string_view name) {
  const std::string s = lower_dashed(name);
  for (auto cls : {GraphClass::kAllPlane, GraphClass::kForest, GraphClass::kPerfectMatching,
                   GraphClass::kSpanningTree, GraphClass::kSpanningCycle,
                   GraphClass::kTriangulation})
    if (s == to_string(cls)) return cls;
  if (s == "plane" || s == "allplane") return GraphClass::kAllPlane;
  if (s == "matching" || s == "perfectmatching") return GraphClass::kPerfectMatching;
  if (s == "tree" || s == "spanningtree") return GraphClass::kSpanningTree;
  if (s == "cycle" || s == "tour" || s == "spanningcycle") return GraphClass::kSpanningCycle;
  throw InvalidInput("unknown graph class \"" + std::string(name) + "\"");
}

std::vector<Edge> EdgeGraph::edge_list() const {
  std::vector<Edge> out;
  edges.for_each([&](int e) { out.push_back(edge_at(n, e)); });
  return out;
}

CrossingTable::CrossingTable(const PointSet& ps) : n_(ps.size()) {
  if (n_ > kMaxPoints) throw LimitExceeded("crossing table supports at most " +
                                           std::to_string(kMaxPoints) + " points");
  const int m = edge_count(n_);
  crossers_.assign(m, EdgeMask{});
  std::vector<Edge> edges(m);
  for (int e = 0; e < m; ++e) edges[e] = edge_at(n_, e);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (segments_cross(edges[a], edges[b], ps)) {
        crossers_[a].set(b);
        crossers_[b].set(a);
      }
}

CrossingTable CrossingTable::empty(int n) {
  if (n > kMaxPoints) throw LimitExceeded("crossing table supports at most " +
                                          std::to_string(kMaxPoints) + " points");
  CrossingTable t;
  t.n_ = n;
  t.crossers_.assign(edge_count(n), EdgeMask{});
  return t;
}

EdgeMask CrossingTable::free_edges() const {
  EdgeMask out;
  for (int e = 0; e < static_cast<int>(crossers_.size()); ++e)
    if (crossers_[e].none()) out.set(e);
  return out;
}

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("MULTIPLICITY_LIMIT_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      const int cap = static_cast<int>(std::min<long>(v, kMaxPoints));
      limits.max_points = limits.max_points_triangulation = limits.max_points_support = cap;
    }
  }
  return limits;
}

void enumerate(const PointSet& ps, GraphClass cls, const GraphSink& sink,
               const EnumerationOptions& options) {
  const Prepared prep = prepare(ps, cls, options);
  auto emit = [&](const EdgeMask& m) { sink(EdgeGraph{prep.n, m}); };
  run_search(prep, cls, Shard{}, emit, false);
}

std::vector<EdgeGraph> enumerate_all(const PointSet& ps, GraphClass cls,
                                     const EnumerationOptions& options) {
  std::vector<EdgeGraph> out;
  enumerate(ps, cls, [&](const EdgeGraph& g) { out.push_back(g); }, options);
  return out;
}

BigInt count(const PointSet& ps, GraphClass cls, const EnumerationOptions& options) {
  const Prepared prep = prepare(ps, cls, options);
  const bool factor = cls == GraphClass::kAllPlane;
  const int workers = std::max(1, options.workers);
  std::vector<unsigned long long> partial(workers, 0);
  if (workers == 1) {
    Counter c;
    run_search(prep, cls, Shard{}, c, factor);
    partial[0] = c.value;
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        Counter c;
        run_search(prep, cls, Shard{w, workers}, c, factor);
        partial[w] = c.value;
      });
    for (auto& t : pool) t.join();
  }
  BigInt total = 0;
  for (auto v : partial) total += v;
  if (factor) {
    const int free = (prep.table.free_edges() & prep.allowed).count();
    total <<= free;
  }
  return total;
}

BigInt count_triangulations_by_flips(const PointSet& ps, const EnumerationOptions& options) {
  const Prepared prep = prepare(ps, GraphClass::kTriangulation, options);
  const auto& table = prep.table;
  EdgeMask seed;
  prep.allowed.for_each([&](int e) {
    if (!table.crossers(e).intersects(seed)) seed.set(e);
  });
  std::unordered_set<EdgeMask, EdgeMaskHash> seen{seed};
  std::deque<EdgeMask> queue{seed};
  while (!queue.empty()) {
    const EdgeMask t = queue.front();
    queue.pop_front();
    t.for_each([&](int e) {
      EdgeMask rest = t;
      rest.reset(e);
      (table.crossers(e) & prep.allowed).for_each([&](int f) {
        if (table.crossers(f).intersects(rest)) return;
        EdgeMask flipped = rest;
        flipped.set(f);
        if (seen.insert(flipped).second) queue.push_back(flipped);
      });
    });
  }
  return BigInt(seen.size());
}

Rational SupportTable::identity_sum() const {
  Rational sum = 0;
  for (const auto& t : triangulations)
    for (std::size_t c = 0; c < cycles.size(); ++c)
      if (cycles[c].is_subset_of(t)) sum += Rational(1, support[c]);
  return sum;
}

SupportTable support_table(const PointSet& ps, const EnumerationOptions& options) {
  const int cap = std::min(options.limits.max_points_support, kMaxPoints);
  if (ps.size() > cap)
    throw LimitExceeded("support tables are limited to n <= " + std::to_string(cap));
  SupportTable table;
  table.n = ps.size();
  enumerate(ps, GraphClass::kSpanningCycle,
            [&](const EdgeGraph& g) { table.cycles.push_back(g.edges); }, options);
  enumerate(ps, GraphClass::kTriangulation,
            [&](const EdgeGraph& g) { table.triangulations.push_back(g.edges); }, options);
  table.support.assign(table.cycles.size(), 0);
  for (std::size_t c = 0; c < table.cycles.size(); ++c)
    for (const auto& t : table.triangulations)
      if (table.cycles[c].is_subset_of(t)) ++table.support[c];
  return table;
}

BigInt middle_region_triangulation_count(int m) {
  if (m < 2) throw InvalidInput("middle region needs chains of at least 2 points");
  return binomial(2 * m - 2, m - 1);
}

BigInt bridge_type_count(int i, int j) {
  if (i < 1 || j < 1) throw InvalidInput("bridge sizes must be positive");
  return binomial(i + j - 2, i - 1);
}

std::vector<BigInt> chain_reduction_counts(int k) {
  if (k < 0) throw InvalidInput("reflex chain length must be non-negative");
  // ways[j][r]: the envelope ends at surviving vertex j with r vertices removed.
  const int last = k + 1;
  std::vector<std::vector<BigInt>> ways(last + 1, std::vector<BigInt>(k + 1, 0));
  ways[0][0] = 1;
  for (int j = 1; j <= last; ++j)
    for (int p = 0; p < j; ++p) {
      const int gap = j - p - 1;
      for (int r = gap; r <= k; ++r) ways[j][r] += ways[p][r - gap] * catalan(gap);
    }
  return ways[last];
}

}  // namespace multiplicity
