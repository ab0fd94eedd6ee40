#pragma once

#include <map>
#include <optional>
#include <vector>

#include "graph/graph.hpp"

namespace linkless::minor {

inline constexpr int kDefaultVertexCap = 16;

// Certificate that a pattern is a minor of a host: disjoint connected branch
// sets (keyed by pattern vertex) and, for each pattern edge, a host edge
// running between the two corresponding branch sets.
struct MinorModel {
  std::map<VertexId, std::vector<VertexId>> branch_sets;
  std::map<EdgeId, EdgeId> edge_map;

  friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

// Exact branch-set search. pattern must be simple and connected; host loops
// and parallel edges are ignored. Throws ResourceError when the host has more
// than vertex_cap vertices, InputError for a bad pattern.
std::optional<MinorModel> has_minor(const Graph& host, const Graph& pattern, int vertex_cap = kDefaultVertexCap);

// Checks every MinorModel invariant; malformed models yield false.
bool verify_minor_model(const Graph& host, const Graph& pattern, const MinorModel& model);

struct LinklessVerdict {
  bool embeddable = true;
  // 1-based index into exchange::petersen_family(); 0 when embeddable.
  int family_member = 0;
  std::optional<MinorModel> witness;
};

// Embeddable iff no Petersen family member is a minor of simplify(g). The
// first member (in family order) found as a minor is reported.
LinklessVerdict is_linklessly_embeddable(const Graph& g, int vertex_cap = kDefaultVertexCap);

}  // namespace linkless::minor
