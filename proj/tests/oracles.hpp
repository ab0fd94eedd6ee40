#pragma once

// Slow reference implementations for the tests. They only read a Graph's
// vertex and edge lists and otherwise work on their own representation, so a
// bug in the library cannot leak into the expected values.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "graph/graph.hpp"

namespace oracle {

// Simple graph on 0..n-1. Loops and repeated edges of the source are dropped;
// the first (lowest-id) edge of a parallel class is kept.
struct Simple {
  int n = 0;
  std::vector<std::vector<char>> adj;
  std::vector<std::pair<int, int>> edges;  // u < v
  std::vector<int> source_id;              // edge id in the source graph

  bool has(int a, int b) const { return adj[a][b] != 0; }
  int m() const { return static_cast<int>(edges.size()); }
};

inline Simple from(const linkless::Graph& g) {
  Simple s;
  s.n = g.vertex_count();
  s.adj.assign(s.n, std::vector<char>(s.n, 0));
  for (const auto& e : g.edges()) {
    int a = g.vertex_index(e.u);
    int b = g.vertex_index(e.v);
    if (a == b || s.adj[a][b]) continue;
    s.adj[a][b] = s.adj[b][a] = 1;
    s.edges.emplace_back(std::min(a, b), std::max(a, b));
    s.source_id.push_back(e.id);
  }
  return s;
}

inline Simple complete(int n) {
  linkless::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return from(g);
}

// Connectivity of the subgraph induced on the vertex set `keep`.
inline bool connected_on(const Simple& s, const std::vector<char>& keep) {
  int start = -1, total = 0;
  for (int v = 0; v < s.n; ++v)
    if (keep[v]) {
      ++total;
      if (start < 0) start = v;
    }
  if (total <= 1) return true;
  std::vector<char> seen(s.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < s.n; ++w)
      if (keep[w] && !seen[w] && s.has(v, w)) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == total;
}

// Smallest vertex set whose removal leaves a disconnected graph; n-1 for
// complete graphs, 0 for n <= 1 or disconnected graphs.
inline int vertex_connectivity(const Simple& s) {
  if (s.n <= 1) return 0;
  if (s.m() == s.n * (s.n - 1) / 2) return s.n - 1;
  for (int k = 0; k <= s.n - 2; ++k) {
    std::vector<char> removed(s.n, 0);
    std::fill(removed.end() - k, removed.end(), 1);
    do {
      std::vector<char> keep(s.n);
      for (int v = 0; v < s.n; ++v) keep[v] = !removed[v];
      if (!connected_on(s, keep)) return k;
    } while (std::next_permutation(removed.begin(), removed.end()));
  }
  return s.n - 1;
}

// Rotation with the least vertex first and its smaller neighbour second.
inline std::vector<int> normal_cycle(std::vector<int> c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

// Every simple cycle, found as Hamiltonian cycles of vertex subsets by
// trying all orders.
inline std::set<std::vector<int>> all_cycles(const Simple& s) {
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1U << s.n); ++mask) {
    if (std::popcount(mask) < 3) continue;
    std::vector<int> vs;
    for (int v = 0; v < s.n; ++v)
      if (mask >> v & 1U) vs.push_back(v);
    // vs[0] stays first; permute the rest.
    do {
      bool ok = true;
      for (std::size_t i = 0; i < vs.size() && ok; ++i) ok = s.has(vs[i], vs[(i + 1) % vs.size()]);
      if (ok) out.insert(normal_cycle(vs));
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  }
  return out;
}

enum class Kind { None, K5, K33 };

// Is the subgraph formed by the chosen edges (bit i = s.edges[i]) a
// subdivision of K5 or K3,3? Degree-2 vertices are smoothed one by one and the
// resulting multigraph on the branch vertices is compared with the pattern.
inline Kind kuratowski_kind(const Simple& s, std::uint64_t chosen) {
  std::vector<std::vector<int>> mult(s.n, std::vector<int>(s.n, 0));
  std::vector<int> deg(s.n, 0);
  for (int i = 0; i < s.m(); ++i)
    if (chosen >> i & 1U) {
      auto [a, b] = s.edges[i];
      ++mult[a][b];
      ++mult[b][a];
      ++deg[a];
      ++deg[b];
    }
  std::vector<char> used(s.n, 0);
  for (int v = 0; v < s.n; ++v) used[v] = deg[v] > 0;
  // Connected?
  if (!connected_on(
          [&] {
            Simple t = s;
            for (int a = 0; a < s.n; ++a)
              for (int b = 0; b < s.n; ++b) t.adj[a][b] = mult[a][b] > 0;
            return t;
          }(),
          used))
    return Kind::None;
  for (int v = 0; v < s.n; ++v)
    if (used[v] && deg[v] != 2 && deg[v] != 3 && deg[v] != 4) return Kind::None;
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < s.n; ++v) {
      if (!used[v] || deg[v] != 2) continue;
      std::vector<int> ends;
      for (int w = 0; w < s.n; ++w)
        for (int k = 0; k < mult[v][w]; ++k) ends.push_back(w);
      if (ends.size() != 2 || ends[0] == ends[1]) return Kind::None;
      int a = ends[0], b = ends[1];
      --mult[v][a], --mult[a][v], --mult[v][b], --mult[b][v];
      ++mult[a][b], ++mult[b][a];
      used[v] = 0;
      deg[v] = 0;
      changed = true;
    }
  }
  std::vector<int> branch;
  for (int v = 0; v < s.n; ++v)
    if (used[v]) branch.push_back(v);
  for (int a : branch)
    for (int b : branch)
      if (mult[a][b] > 1) return Kind::None;
  if (branch.size() == 5) {
    for (int a : branch)
      for (int b : branch)
        if (a != b && mult[a][b] != 1) return Kind::None;
    return Kind::K5;
  }
  if (branch.size() == 6) {
    // Two-colour the branch graph; it must be complete bipartite 3+3.
    std::vector<int> side(s.n, -1);
    side[branch[0]] = 0;
    for (int a : branch)
      if (a != branch[0]) side[a] = mult[branch[0]][a] ? 1 : 0;
    int ones = 0;
    for (int a : branch) ones += side[a];
    if (ones != 3) return Kind::None;
    for (int a : branch)
      for (int b : branch)
        if (a != b && mult[a][b] != (side[a] != side[b] ? 1 : 0)) return Kind::None;
    return Kind::K33;
  }
  return Kind::None;
}

// Edge masks of every Kuratowski subgraph. A K5 subdivision in an n-vertex
// graph has at most n + 5 edges, a K3,3 subdivision at most n + 3.
inline std::set<std::uint64_t> all_kuratowski_edge_sets(const Simple& s) {
  std::set<std::uint64_t> out;
  const int m = s.m();
  for (int size = 9; size <= std::min(m, s.n + 5); ++size) {
    std::vector<char> pick(m, 0);
    std::fill(pick.end() - size, pick.end(), 1);
    do {
      std::uint64_t mask = 0;
      for (int i = 0; i < m; ++i)
        if (pick[i]) mask |= std::uint64_t{1} << i;
      if (kuratowski_kind(s, mask) != Kind::None) out.insert(mask);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return out;
}

inline bool planar_by_subsets(const Simple& s) {
  const int m = s.m();
  for (int size = 9; size <= std::min(m, s.n + 5); ++size) {
    std::vector<char> pick(m, 0);
    std::fill(pick.end() - size, pick.end(), 1);
    do {
      std::uint64_t mask = 0;
      for (int i = 0; i < m; ++i)
        if (pick[i]) mask |= std::uint64_t{1} << i;
      if (kuratowski_kind(s, mask) != Kind::None) return false;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return true;
}

// Is `pattern` a minor of `host`? Tries every partition of the host vertices
// into an unused block and exactly k connected branch sets, then every
// bijection of pattern vertices to branch sets.
inline bool has_minor(const Simple& host, const Simple& pattern) {
  const int n = host.n, k = pattern.n;
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<int> block(n, 0);  // 0 = unused, 1..k = branch sets
  std::vector<int> perm(k);
  std::function<bool(int, int)> rec = [&](int v, int used_blocks) -> bool {
    if (n - v < k - used_blocks) return false;
    if (v == n) {
      if (used_blocks != k) return false;
      for (int b = 1; b <= k; ++b) {
        std::vector<char> keep(n);
        for (int x = 0; x < n; ++x) keep[x] = block[x] == b;
        if (!connected_on(host, keep)) return false;
      }
      std::vector<std::vector<char>> q(k, std::vector<char>(k, 0));
      for (auto [a, b] : host.edges) {
        int x = block[a], y = block[b];
        if (x && y && x != y) q[x - 1][y - 1] = q[y - 1][x - 1] = 1;
      }
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool ok = true;
        for (auto [a, b] : pattern.edges) {
          if (!q[perm[a]][perm[b]]) {
            ok = false;
            break;
          }
        }
        if (ok) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return false;
    }
    for (int b = 0; b <= std::min(used_blocks + 1, k); ++b) {
      block[v] = b;
      if (rec(v + 1, std::max(used_blocks, b))) return true;
    }
    return false;
  };
  return rec(0, 0);
}

// 1-adjacency by direct path search. h1 and h2 are edge masks over s.edges.
inline bool one_adjacent(const Simple& s, std::uint64_t h1, std::uint64_t h2) {
  auto test = [&](std::uint64_t hi, std::uint64_t other) {
    std::vector<char> on(s.n, 0);
    for (int i = 0; i < s.m(); ++i)
      if (hi >> i & 1U) on[s.edges[i].first] = on[s.edges[i].second] = 1;
    auto edge_index = [&](int a, int b) {
      for (int i = 0; i < s.m(); ++i)
        if (s.edges[i] == std::pair{std::min(a, b), std::max(a, b)}) return i;
      return -1;
    };
    bool found = false;
    std::vector<char> visited(s.n, 0);
    std::function<void(int, std::uint64_t)> walk = [&](int v, std::uint64_t path) {
      if (found) return;
      for (int w = 0; w < s.n && !found; ++w) {
        if (!s.has(v, w) || visited[w]) continue;
        int e = edge_index(v, w);
        if (hi >> e & 1U) continue;
        std::uint64_t next = path | (std::uint64_t{1} << e);
        if (on[w]) {
          if ((other & ~(hi | next)) == 0) found = true;
          continue;
        }
        visited[w] = 1;
        walk(w, next);
        visited[w] = 0;
      }
    };
    for (int a = 0; a < s.n && !found; ++a) {
      if (!on[a]) continue;
      visited[a] = 1;
      walk(a, 0);
      visited[a] = 0;
    }
    return found;
  };
  return test(h1, h2) || test(h2, h1);
}

// Proper crossing of two straight chords with vertices placed on the unit
// circle in the given cyclic order.
inline bool segments_cross(const std::vector<int>& order, std::pair<int, int> e, std::pair<int, int> f) {
  const int n = static_cast<int>(order.size());
  auto point = [&](int v) {
    int p = static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin());
    double t = 2 * std::numbers::pi * p / n;
    return std::pair{std::cos(t), std::sin(t)};
  };
  auto orient = [](std::pair<double, double> a, std::pair<double, double> b, std::pair<double, double> c) {
    double d = (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
    return d > 1e-9 ? 1 : d < -1e-9 ? -1 : 0;
  };
  if (e.first == f.first || e.first == f.second || e.second == f.first || e.second == f.second) return false;
  auto a = point(e.first), b = point(e.second), c = point(f.first), d = point(f.second);
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

}  // namespace oracle
