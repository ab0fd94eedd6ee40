#include "graph/canonical.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace linkless {

namespace {

using Coloring = std::vector<int>;

// Replaces colors by the rank of keys[v]; returns the number of cells.
template <typename Key>
int rerank(Coloring& colors, const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }
  return static_cast<int>(sorted.size());
}

// Colour refinement to the coarsest equitable partition finer than `colors`.
// A vertex's old colour is the leading key, so cell order is label-invariant.
int refine(const DenseGraph& g, Coloring& colors, int cells) {
  const auto n = static_cast<std::size_t>(g.n);
  std::vector<std::pair<int, std::vector<int>>> keys(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      keys[v].first = colors[v];
      keys[v].second.clear();
      for (VertexMask m = g.adj[v]; m; m &= m - 1) keys[v].second.push_back(colors[static_cast<std::size_t>(lowest(m))]);
      std::sort(keys[v].second.begin(), keys[v].second.end());
    }
    int next = rerank(colors, keys);
    if (next == cells) return cells;
    cells = next;
  }
}

class Search {
 public:
  explicit Search(const DenseGraph& g) : g_(g) {}

  Canonical run() {
    Coloring colors(static_cast<std::size_t>(g_.n), 0);
    std::vector<int> degree_keys(static_cast<std::size_t>(g_.n));
    for (int v = 0; v < g_.n; ++v) degree_keys[static_cast<std::size_t>(v)] = g_.degree(v);
    int cells = g_.n == 0 ? 0 : rerank(colors, degree_keys);
    cells = refine(g_, colors, cells);
    descend(colors, cells);
    Canonical out;
    out.label = std::move(best_);
    out.position = std::move(best_position_);
    return out;
  }

 private:
  bool twins(int a, int b) const {
    return (g_.adj[static_cast<std::size_t>(a)] & ~bit(b)) == (g_.adj[static_cast<std::size_t>(b)] & ~bit(a));
  }

  void descend(const Coloring& colors, int cells) {
    if (cells == g_.n) {
      leaf(colors);
      return;
    }
    // First non-singleton cell.
    std::vector<int> count(static_cast<std::size_t>(cells), 0);
    for (int c : colors) ++count[static_cast<std::size_t>(c)];
    int target = 0;
    while (count[static_cast<std::size_t>(target)] == 1) ++target;

    std::vector<int> tried;
    for (int v = 0; v < g_.n; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      // Swapping twins fixes the current partition, so their subtrees agree.
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); })) continue;
      tried.push_back(v);

      Coloring child = colors;
      std::vector<int> keys(static_cast<std::size_t>(g_.n));
      for (int w = 0; w < g_.n; ++w) {
        int c = colors[static_cast<std::size_t>(w)];
        keys[static_cast<std::size_t>(w)] = 2 * c + (c == target && w != v ? 1 : 0);
      }
      int child_cells = rerank(child, keys);
      child_cells = refine(g_, child, child_cells);
      descend(child, child_cells);
    }
  }

  void leaf(const Coloring& colors) {
    const int n = g_.n;
    std::vector<int> at(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) at[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v;
    CanonicalLabel label;
    label.push_back(static_cast<std::uint8_t>(n));
    int acc = 0;
    int used = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        acc = (acc << 1) | (g_.has(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(j)]) ? 1 : 0);
        if (++used == 8) {
          label.push_back(static_cast<std::uint8_t>(acc));
          acc = used = 0;
        }
      }
    }
    if (used > 0) label.push_back(static_cast<std::uint8_t>(acc << (8 - used)));
    if (!have_best_ || label > best_) {
      have_best_ = true;
      best_ = std::move(label);
      best_position_ = colors;
    }
  }

  const DenseGraph& g_;
  bool have_best_ = false;
  CanonicalLabel best_;
  std::vector<int> best_position_;
};

}  // namespace

Canonical canonicalize(const DenseGraph& g) { return Search(g).run(); }

CanonicalLabel canonical_form(const Graph& g) { return canonicalize(DenseGraph::from(g)).label; }

Graph canonical_graph(const Graph& g) {
  DenseGraph d = DenseGraph::from(g);
  Canonical c = canonicalize(d);
  Graph out(d.n);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < d.n; ++a)
    for (int b = a + 1; b < d.n; ++b)
      if (d.has(a, b)) {
        int pa = c.position[static_cast<std::size_t>(a)];
        int pb = c.position[static_cast<std::size_t>(b)];
        edges.emplace_back(std::min(pa, pb), std::max(pa, pb));
      }
  std::sort(edges.begin(), edges.end());
  for (auto [a, b] : edges) out.add_edge(a, b);
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace linkless
