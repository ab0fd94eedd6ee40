#include "graph/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "graph/dense.hpp"

namespace linkless {

namespace {

// Maximum number of internally disjoint s-t paths for nonadjacent s, t.
// Unit-capacity flow on the split graph: v_in = 2v, v_out = 2v+1.
int local_connectivity(const DenseGraph& d, int s, int t) {
  const int nodes = 2 * d.n;
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes), std::vector<int>(static_cast<std::size_t>(nodes), 0));
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  for (int v = 0; v < d.n; ++v) {
    cap[static_cast<std::size_t>(2 * v)][static_cast<std::size_t>(2 * v + 1)] = (v == s || v == t) ? kInf : 1;
    for (VertexMask m = d.adj[static_cast<std::size_t>(v)]; m; m &= m - 1) {
      int w = lowest(m);
      cap[static_cast<std::size_t>(2 * v + 1)][static_cast<std::size_t>(2 * w)] = kInf;
    }
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[static_cast<std::size_t>(sink)] < 0) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < nodes; ++y) {
        if (parent[static_cast<std::size_t>(y)] < 0 && cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0) {
          parent[static_cast<std::size_t>(y)] = x;
          q.push(y);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) return flow;
    for (int y = sink; y != source; y = parent[static_cast<std::size_t>(y)]) {
      int x = parent[static_cast<std::size_t>(y)];
      cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] -= 1;
      cap[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] += 1;
    }
    ++flow;
  }
}

}  // namespace

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<std::vector<VertexId>> components(const Graph& g) {
  DenseGraph d = DenseGraph::from(g);
  std::vector<std::vector<VertexId>> out;
  VertexMask left = d.all();
  while (left) {
    VertexMask comp = d.reach(lowest(left), left);
    left &= ~comp;
    std::vector<VertexId>& part = out.emplace_back();
    for (VertexMask m = comp; m; m &= m - 1) part.push_back(d.label[static_cast<std::size_t>(lowest(m))]);
  }
  return out;
}

int vertex_connectivity(const Graph& g) {
  DenseGraph d = DenseGraph::from(g);
  if (d.n <= 1) return 0;
  if (!d.connected(d.all())) return 0;
  int best = d.n - 1;
  for (int s = 0; s < d.n; ++s) {
    for (int t = s + 1; t < d.n; ++t) {
      if (d.has(s, t)) continue;
      best = std::min(best, local_connectivity(d, s, t));
    }
  }
  return best;
}

}  // namespace linkless
