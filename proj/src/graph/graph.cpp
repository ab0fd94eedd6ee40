#include "graph/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "errors.hpp"

namespace linkless {

namespace {

Edge make_edge(VertexId a, VertexId b, EdgeId id) {
  return a <= b ? Edge{a, b, id} : Edge{b, a, id};
}

}  // namespace

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  vertices_.resize(static_cast<std::size_t>(vertex_count));
  for (int i = 0; i < vertex_count; ++i) vertices_[static_cast<std::size_t>(i)] = i;
}

Graph Graph::from_edges(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph g(vertex_count);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

Graph Graph::from_edges(int vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  return from_edges(vertex_count, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
}

VertexId Graph::add_vertex() {
  VertexId v = vertices_.empty() ? 0 : vertices_.back() + 1;
  vertices_.push_back(v);
  return v;
}

void Graph::add_vertex(VertexId v) {
  if (v < 0) throw InputError("negative vertex id " + std::to_string(v));
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it != vertices_.end() && *it == v) throw InputError("duplicate vertex " + std::to_string(v));
  vertices_.insert(it, v);
}

EdgeId Graph::add_edge(VertexId a, VertexId b) {
  if (!has_vertex(a) || !has_vertex(b)) {
    throw InputError("edge endpoint is not a vertex: " + std::to_string(a) + "-" + std::to_string(b));
  }
  EdgeId id = next_edge_id_++;
  edges_.push_back(make_edge(a, b, id));
  return id;
}

void Graph::remove_edge(EdgeId e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, EdgeId id) { return x.id < id; });
  if (it == edges_.end() || it->id != e) throw InputError("unknown edge id " + std::to_string(e));
  edges_.erase(it);
}

void Graph::remove_vertex(VertexId v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw InputError("unknown vertex " + std::to_string(v));
  vertices_.erase(it);
  std::erase_if(edges_, [v](const Edge& e) { return e.touches(v); });
}

void Graph::merge_vertex_into(VertexId from, VertexId to) {
  if (!has_vertex(from) || !has_vertex(to)) throw InputError("unknown vertex in merge");
  if (from == to) return;
  for (Edge& e : edges_) {
    VertexId a = e.u == from ? to : e.u;
    VertexId b = e.v == from ? to : e.v;
    e = make_edge(a, b, e.id);
  }
  vertices_.erase(std::lower_bound(vertices_.begin(), vertices_.end(), from));
}

bool Graph::has_vertex(VertexId v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(EdgeId e) const noexcept {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, EdgeId id) { return x.id < id; });
  return it != edges_.end() && it->id == e;
}

const Edge& Graph::edge(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, EdgeId id) { return x.id < id; });
  if (it == edges_.end() || it->id != e) throw InputError("unknown edge id " + std::to_string(e));
  return *it;
}

int Graph::vertex_index(VertexId v) const noexcept {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int Graph::degree(VertexId v) const {
  if (!has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
  int d = 0;
  for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  if (!has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
  std::vector<VertexId> out;
  for (const Edge& e : edges_) {
    if (e.touches(v) && !e.is_loop()) out.push_back(e.other(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Graph::adjacent(VertexId a, VertexId b) const { return find_edge(a, b) >= 0; }

EdgeId Graph::find_edge(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  for (const Edge& e : edges_) {
    if (e.u == a && e.v == b) return e.id;
  }
  return -1;
}

bool Graph::is_simple() const noexcept {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : edges_) {
    if (e.is_loop() || !seen.emplace(e.u, e.v).second) return false;
  }
  return true;
}

Graph delete_edge(const Graph& g, EdgeId e) {
  Graph out = g;
  out.remove_edge(e);
  return out;
}

Graph delete_vertex(const Graph& g, VertexId v) {
  Graph out = g;
  out.remove_vertex(v);
  return out;
}

Graph contract_edge(const Graph& g, EdgeId e) {
  const Edge& target = g.edge(e);
  if (target.is_loop()) throw InputError("cannot contract loop " + std::to_string(e));
  Graph out = g;
  out.remove_edge(e);
  out.merge_vertex_into(target.v, target.u);
  return out;
}

Graph simplify(const Graph& g) {
  Graph out = g;
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<EdgeId> drop;
  for (const Edge& e : g.edges()) {
    if (e.is_loop() || !seen.emplace(e.u, e.v).second) drop.push_back(e.id);
  }
  for (EdgeId id : drop) out.remove_edge(id);
  return out;
}

Graph compact(const Graph& g) {
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(g.vertex_index(e.u), g.vertex_index(e.v));
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw InputError("permutation size mismatch");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)]) throw InputError("not a permutation");
    hit[static_cast<std::size_t>(p)] = true;
  }
  Graph out(n);
  for (const Edge& e : g.edges()) {
    out.add_edge(perm[static_cast<std::size_t>(g.vertex_index(e.u))],
                 perm[static_cast<std::size_t>(g.vertex_index(e.v))]);
  }
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg;
  deg.reserve(g.vertices().size());
  for (VertexId v : g.vertices()) deg.push_back(g.degree(v));
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return deg;
}

}  // namespace linkless
