#pragma once

#include <cstdint>
#include <vector>

#include "graph/dense.hpp"
#include "graph/graph.hpp"

namespace linkless {

using CanonicalLabel = std::vector<std::uint8_t>;

struct Canonical {
  // Byte 0 is n; the rest is the upper-triangle adjacency of the relabelled
  // graph, row-major, packed MSB first.
  CanonicalLabel label;
  // position[v] is the canonical index of dense vertex v.
  std::vector<int> position;
};

// Individualisation-refinement search for the lexicographically greatest
// adjacency string. Loops and parallel edges are ignored.
Canonical canonicalize(const DenseGraph& g);
CanonicalLabel canonical_form(const Graph& g);
// g rewritten on vertices 0..n-1 in canonical order.
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace linkless
