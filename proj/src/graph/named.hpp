#pragma once

#include "graph/graph.hpp"

namespace linkless::named {

Graph complete(int n);
Graph complete_bipartite(int a, int b);
// Cycle 0-1-...-(n-1)-0.
Graph cycle(int n);
// Path 0-1-...-(n-1).
Graph path(int n);
// Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram on 5..9.
Graph petersen();
// Disjoint union; vertices of b are shifted past those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace linkless::named
