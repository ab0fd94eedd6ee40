#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "graph/graph.hpp"

namespace linkless {

enum class KuratowskiKind { K5, K33 };

std::string_view to_string(KuratowskiKind kind);

using Path = std::vector<VertexId>;

// A subgraph of a host graph that is a subdivision of K5 or K3,3.
//
// K5: branch_vertices holds the 5 branch vertices ascending and pattern edge
// (i, j), i < j, is paths[pattern_edge_index(i, j)].
// K33: branch_vertices[0..3) and [3..6) are the two sides, each ascending, and
// the side holding the smallest branch vertex comes first. Pattern edge
// (i, 3 + j) is paths[3 * i + j].
// Every path runs from its lower-index branch vertex to the higher one.
struct SubdivisionModel {
  KuratowskiKind kind = KuratowskiKind::K5;
  std::vector<VertexId> branch_vertices;
  std::vector<Path> paths;
  std::vector<EdgeId> edge_set;  // ascending

  friend bool operator==(const SubdivisionModel&, const SubdivisionModel&) = default;
};

// Branch index pairs in path order.
std::span<const std::pair<int, int>> pattern_edges(KuratowskiKind kind);

// Vertices covered by the model, ascending.
std::vector<VertexId> model_vertices(const SubdivisionModel& m);

// Reads the subgraph spanned by edge_ids of a simple host and returns its
// canonical model if it is a Kuratowski subgraph.
std::optional<SubdivisionModel> subdivision_from_edges(const Graph& host, std::span<const EdgeId> edge_ids);

// Full check of every SubdivisionModel invariant against the host.
bool validate_subdivision(const Graph& host, const SubdivisionModel& m);

}  // namespace linkless
