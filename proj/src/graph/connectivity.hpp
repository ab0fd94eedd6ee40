#pragma once

#include <vector>

#include "graph/graph.hpp"

namespace linkless {

bool is_connected(const Graph& g);
// Vertex sets of the connected components, ordered by least vertex.
std::vector<std::vector<VertexId>> components(const Graph& g);

// Least number of vertices whose removal disconnects g or leaves one vertex.
// K_n gives n-1; the empty and one-vertex graphs give 0.
int vertex_connectivity(const Graph& g);

}  // namespace linkless
