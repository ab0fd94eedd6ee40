#pragma once

#include <array>
#include <vector>

#include "graph/canonical.hpp"
#include "graph/graph.hpp"

namespace linkless::exchange {

// Simple: a Y-Delta move adds only the triangle edges that are missing.
// Multigraph: it adds all three unconditionally.
enum class Mode { Simple, Multigraph };

using Triangle = std::array<VertexId, 3>;

struct Move {
  enum class Kind { YDelta, DeltaY } kind;
  VertexId vertex = -1;  // YDelta site
  Triangle triangle{};   // DeltaY site, ascending
};

// Removes v (valency 3, three distinct neighbours) and joins its neighbours
// pairwise. In Simple mode g must be simple.
Graph y_delta(const Graph& g, VertexId v, Mode mode = Mode::Simple);
// Removes the triangle's edges and adds a new vertex (one past the largest
// id) adjacent to its three corners. g must be simple.
Graph delta_y(const Graph& g, Triangle t);

// Number of triangle edges a Y-Delta move at v would find already present.
int y_delta_collisions(const Graph& g, VertexId v);

// All legal moves of a simple graph: Y-Delta sites by ascending vertex, then
// Delta-Y sites by ascending triangle.
std::vector<Move> legal_moves(const Graph& g);
Graph apply(const Graph& g, const Move& m, Mode mode = Mode::Simple);

struct Closure {
  // Isomorphism classes in canonical labelling, sorted by (|V|, canonical form).
  std::vector<Graph> members;
  std::vector<CanonicalLabel> labels;
  // Y-Delta moves met during the search that found a neighbour pair already adjacent.
  int collisions = 0;
  int max_vertices = 0;
};

// Breadth-first closure of {seed} under both moves, deduplicated by canonical
// form. Throws ResourceError if a graph above vertex_cap vertices appears.
Closure closure(const Graph& seed, int vertex_cap = 32);

// The seven graphs reachable from K6; index i here is family member i + 1.
// Computed once.
const std::vector<Graph>& petersen_family();
const std::vector<CanonicalLabel>& petersen_family_labels();

}  // namespace linkless::exchange
