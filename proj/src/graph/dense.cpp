#include "graph/dense.hpp"

#include <string>

#include "errors.hpp"

namespace linkless {

DenseGraph DenseGraph::from(const Graph& g) {
  if (g.vertex_count() > kMaxDenseVertices) {
    throw ResourceError("graph has " + std::to_string(g.vertex_count()) + " vertices; dense kernels support at most " +
                        std::to_string(kMaxDenseVertices));
  }
  DenseGraph d;
  d.n = g.vertex_count();
  d.adj.assign(static_cast<std::size_t>(d.n), 0);
  d.label.assign(g.vertices().begin(), g.vertices().end());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    int a = g.vertex_index(e.u);
    int b = g.vertex_index(e.v);
    d.adj[static_cast<std::size_t>(a)] |= bit(b);
    d.adj[static_cast<std::size_t>(b)] |= bit(a);
  }
  return d;
}

int DenseGraph::edge_count() const noexcept {
  int twice = 0;
  for (VertexMask m : adj) twice += popcount(m);
  return twice / 2;
}

VertexMask DenseGraph::reach(int start, VertexMask within) const noexcept {
  if (!((within >> start) & 1U)) return 0;
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(lowest(f))];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool DenseGraph::connected(VertexMask within) const noexcept {
  if (within == 0) return true;
  return reach(lowest(within), within) == within;
}

int DenseGraph::edges_inside(VertexMask s) const noexcept {
  int twice = 0;
  for (VertexMask m = s; m; m &= m - 1) twice += popcount(adj[static_cast<std::size_t>(lowest(m))] & s);
  return twice / 2;
}

int DenseGraph::edges_between(VertexMask a, VertexMask b) const noexcept {
  int count = 0;
  for (VertexMask m = a; m; m &= m - 1) count += popcount(adj[static_cast<std::size_t>(lowest(m))] & b);
  return count;
}

VertexMask DenseGraph::neighborhood(VertexMask s) const noexcept {
  VertexMask out = 0;
  for (VertexMask m = s; m; m &= m - 1) out |= adj[static_cast<std::size_t>(lowest(m))];
  return out & ~s;
}

}  // namespace linkless
