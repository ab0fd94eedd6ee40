#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "graph/graph.hpp"

namespace linkless {

using VertexMask = std::uint64_t;

inline constexpr int kMaxDenseVertices = 64;

inline VertexMask bit(int i) noexcept { return VertexMask{1} << i; }
inline int popcount(VertexMask m) noexcept { return std::popcount(m); }
inline int lowest(VertexMask m) noexcept { return std::countr_zero(m); }

// Simple-graph view with bitset adjacency over dense indices 0..n-1.
// Index i stands for label[i] of the source graph. Loops and parallel edges
// of the source are dropped.
struct DenseGraph {
  int n = 0;
  std::vector<VertexMask> adj;
  std::vector<VertexId> label;

  // Throws ResourceError above kMaxDenseVertices vertices.
  static DenseGraph from(const Graph& g);

  bool has(int a, int b) const noexcept { return (adj[static_cast<std::size_t>(a)] >> b) & 1U; }
  int degree(int a) const noexcept { return popcount(adj[static_cast<std::size_t>(a)]); }
  VertexMask all() const noexcept { return n == 64 ? ~VertexMask{0} : bit(n) - 1; }
  int edge_count() const noexcept;
  // Vertices of `within` reachable from `start` inside `within`.
  VertexMask reach(int start, VertexMask within) const noexcept;
  bool connected(VertexMask within) const noexcept;
  int edges_inside(VertexMask s) const noexcept;
  int edges_between(VertexMask a, VertexMask b) const noexcept;
  VertexMask neighborhood(VertexMask s) const noexcept;
};

}  // namespace linkless
