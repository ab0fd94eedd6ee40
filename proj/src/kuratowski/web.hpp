#pragma once

#include <string_view>
#include <vector>

#include "graph/graph.hpp"
#include "graph/subdivision.hpp"

namespace linkless::kuratowski {

inline constexpr int kDefaultVertexCap = 10;

// Every subgraph of the simple graph g that is a subdivision of K5 or K3,3,
// once each: K5 models first (branch 5-sets ascending), then K3,3 models
// (branch 6-sets ascending, then bipartitions), paths routed depth-first.
// Throws ResourceError above vertex_cap vertices.
std::vector<SubdivisionModel> enumerate_kuratowski_subgraphs(const Graph& g, int vertex_cap = kDefaultVertexCap);

// Some H_i has a path P whose only vertices on H_i are its two ends and
// H_{3-i} lies in H_i + P.
bool is_1_adjacent(const Graph& g, const SubdivisionModel& h1, const SubdivisionModel& h2);

// Seven vertices u1..u7 and thirteen paths L_ij (i in 1..4, j in 5..7, plus
// L_34), disjoint except at ends, with H1 = rows 2,3,4 and H2 = rows 1,3,4.
// Only K3,3 subdivisions can qualify.
bool is_2_adjacent(const Graph& g, const SubdivisionModel& h1, const SubdivisionModel& h2);

enum class Adjacency { One, Two, Both };
std::string_view to_string(Adjacency a);

struct WebEdge {
  int a = 0;  // a < b, node indices
  int b = 0;
  Adjacency label = Adjacency::One;
};

struct KuratowskiWeb {
  std::vector<SubdivisionModel> nodes;
  std::vector<WebEdge> edges;  // ascending (a, b)
};

KuratowskiWeb build_web(const Graph& g, int vertex_cap = kDefaultVertexCap);

// Empty, single-node, or connected under the union of both relations.
bool is_connected_web(const KuratowskiWeb& w);

}  // namespace linkless::kuratowski
