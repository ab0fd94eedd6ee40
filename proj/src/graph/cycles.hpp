#pragma once

#include <vector>

#include "graph/graph.hpp"

namespace linkless {

// A simple cycle as a vertex sequence; consecutive vertices and the last and
// first are adjacent. Canonical rotation: least vertex first, and its lesser
// cycle neighbour second.
using Cycle = std::vector<VertexId>;

inline constexpr int kDefaultCycleVertexCap = 12;

// Every simple cycle (length >= 3) of the simple graph g exactly once, ordered
// by least vertex and then depth-first with ascending neighbours.
// Throws ResourceError if g has more than vertex_cap vertices.
std::vector<Cycle> enumerate_cycles(const Graph& g, int vertex_cap = kDefaultCycleVertexCap);

// Rotates/reflects a cycle into canonical form.
Cycle canonical_cycle(Cycle c);

// True iff c is a simple cycle of g (length >= 3, every step an edge).
bool is_cycle_of(const Graph& g, const Cycle& c);

// Ids of the edges of c in g, in traversal order (lowest id per step).
std::vector<EdgeId> cycle_edges(const Graph& g, const Cycle& c);

}  // namespace linkless
