#include "graph/named.hpp"

namespace linkless::named {

Graph complete(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out = compact(a);
  const int shift = out.vertex_count();
  for (int i = 0; i < b.vertex_count(); ++i) out.add_vertex(shift + i);
  for (const Edge& e : b.edges()) out.add_edge(shift + b.vertex_index(e.u), shift + b.vertex_index(e.v));
  return out;
}

}  // namespace linkless::named
