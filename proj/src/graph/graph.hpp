#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace linkless {

using VertexId = int;
using EdgeId = int;

// Endpoints are stored with u <= v; u == v is a loop.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeId id = 0;

  bool is_loop() const noexcept { return u == v; }
  bool touches(VertexId x) const noexcept { return u == x || v == x; }
  VertexId other(VertexId x) const noexcept { return u == x ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite undirected multigraph. Vertex ids are kept sorted; edges are kept in
// id order and ids are never reused, so an id survives deletions and
// contractions of other edges.
class Graph {
 public:
  Graph() = default;
  // Vertices 0..vertex_count-1, no edges.
  explicit Graph(int vertex_count);

  static Graph from_edges(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);
  static Graph from_edges(int vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edges);

  // Adds a fresh vertex with id one past the current maximum.
  VertexId add_vertex();
  void add_vertex(VertexId v);
  EdgeId add_edge(VertexId a, VertexId b);

  void remove_edge(EdgeId e);
  // Removes v and every edge incident to it.
  void remove_vertex(VertexId v);
  // Re-attaches every edge end at `from` to `to`, then drops `from`.
  void merge_vertex_into(VertexId from, VertexId to);

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  bool has_vertex(VertexId v) const noexcept;
  bool has_edge(EdgeId e) const noexcept;
  // Throws InputError for an unknown id.
  const Edge& edge(EdgeId e) const;
  // Position of v in vertices(), or -1.
  int vertex_index(VertexId v) const noexcept;

  // Loops contribute 2.
  int degree(VertexId v) const;
  // Distinct neighbours other than v itself, ascending.
  std::vector<VertexId> neighbors(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;
  // Lowest-id edge joining a and b, or -1.
  EdgeId find_edge(VertexId a, VertexId b) const;

  bool is_simple() const noexcept;
  EdgeId next_edge_id() const noexcept { return next_edge_id_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  EdgeId next_edge_id_ = 0;
};

// Pure graph operations; the argument is never modified.
Graph delete_edge(const Graph& g, EdgeId e);
Graph delete_vertex(const Graph& g, VertexId v);
// Identifies the ends of a non-loop edge. The surviving vertex keeps the
// smaller id. Parallel edges and loops created by the identification stay.
Graph contract_edge(const Graph& g, EdgeId e);
// Drops loops and keeps the lowest-id edge of every parallel class.
Graph simplify(const Graph& g);
// Vertices renumbered 0..n-1 in current order, edges renumbered in order.
Graph compact(const Graph& g);
// Vertex at position i of vertices() becomes perm[i]; perm must be a
// permutation of 0..n-1. Edges are renumbered 0..m-1 in their old order.
Graph relabel(const Graph& g, std::span<const int> perm);

std::vector<int> degree_sequence(const Graph& g);  // non-increasing

}  // namespace linkless
