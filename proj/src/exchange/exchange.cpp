#include "exchange/exchange.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "graph/named.hpp"

namespace linkless::exchange {

namespace {

std::vector<VertexId> y_site_neighbors(const Graph& g, VertexId v) {
  if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (g.degree(v) != 3) throw InputError("Y-Delta site " + std::to_string(v) + " does not have valency 3");
  std::vector<VertexId> nbrs = g.neighbors(v);
  if (nbrs.size() != 3) throw InputError("Y-Delta site " + std::to_string(v) + " has repeated neighbours");
  return nbrs;
}

}  // namespace

int y_delta_collisions(const Graph& g, VertexId v) {
  auto n = y_site_neighbors(g, v);
  return g.adjacent(n[0], n[1]) + g.adjacent(n[0], n[2]) + g.adjacent(n[1], n[2]);
}

Graph y_delta(const Graph& g, VertexId v, Mode mode) {
  if (mode == Mode::Simple && !g.is_simple()) throw InputError("simple-mode Y-Delta needs a simple graph");
  auto n = y_site_neighbors(g, v);
  Graph out = delete_vertex(g, v);
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    VertexId a = n[static_cast<std::size_t>(i)];
    VertexId b = n[static_cast<std::size_t>(j)];
    if (mode == Mode::Multigraph || !out.adjacent(a, b)) out.add_edge(a, b);
  }
  return out;
}

Graph delta_y(const Graph& g, Triangle t) {
  if (!g.is_simple()) throw InputError("Delta-Y needs a simple graph");
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw InputError("Delta-Y site has repeated vertices");
  EdgeId ab = g.find_edge(t[0], t[1]);
  EdgeId ac = g.find_edge(t[0], t[2]);
  EdgeId bc = g.find_edge(t[1], t[2]);
  if (ab < 0 || ac < 0 || bc < 0) throw InputError("Delta-Y site is not a triangle");
  Graph out = g;
  out.remove_edge(ab);
  out.remove_edge(ac);
  out.remove_edge(bc);
  VertexId centre = out.add_vertex();
  for (VertexId x : t) out.add_edge(centre, x);
  return out;
}

std::vector<Move> legal_moves(const Graph& g) {
  std::vector<Move> moves;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 3 && g.neighbors(v).size() == 3) moves.push_back({Move::Kind::YDelta, v, {}});
  }
  for (VertexId a : g.vertices()) {
    for (VertexId b : g.neighbors(a)) {
      if (b <= a) continue;
      for (VertexId c : g.neighbors(b)) {
        if (c <= b || !g.adjacent(a, c)) continue;
        moves.push_back({Move::Kind::DeltaY, -1, {a, b, c}});
      }
    }
  }
  return moves;
}

Graph apply(const Graph& g, const Move& m, Mode mode) {
  return m.kind == Move::Kind::YDelta ? y_delta(g, m.vertex, mode) : delta_y(g, m.triangle);
}

Closure closure(const Graph& seed, int vertex_cap) {
  std::map<CanonicalLabel, Graph> seen;
  std::deque<Graph> work;
  Closure out;

  auto visit = [&](const Graph& g) {
    if (g.vertex_count() > vertex_cap) {
      throw ResourceError("exchange closure exceeded " + std::to_string(vertex_cap) + " vertices");
    }
    Graph canon = canonical_graph(g);
    CanonicalLabel label = canonical_form(canon);
    if (seen.emplace(label, canon).second) {
      out.max_vertices = std::max(out.max_vertices, canon.vertex_count());
      work.push_back(std::move(canon));
    }
  };

  visit(simplify(seed));
  while (!work.empty()) {
    Graph g = std::move(work.front());
    work.pop_front();
    for (const Move& m : legal_moves(g)) {
      if (m.kind == Move::Kind::YDelta && y_delta_collisions(g, m.vertex) > 0) ++out.collisions;
      visit(apply(g, m, Mode::Simple));
    }
  }

  std::vector<std::pair<CanonicalLabel, Graph>> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.second.vertex_count() != b.second.vertex_count()) return a.second.vertex_count() < b.second.vertex_count();
    return a.first < b.first;
  });
  for (auto& [label, g] : sorted) {
    out.labels.push_back(label);
    out.members.push_back(std::move(g));
  }
  return out;
}

namespace {

struct Family {
  std::vector<Graph> members;
  std::vector<CanonicalLabel> labels;
};

const Family& family() {
  static const Family cached = [] {
    Closure c = closure(named::complete(6), 10);
    // Within this closure simple and multigraph Y-Delta coincide.
    if (c.collisions != 0) throw std::logic_error("Y-Delta collision inside the K6 closure");
    if (c.max_vertices > 10) throw std::logic_error("K6 closure member above 10 vertices");
    return Family{std::move(c.members), std::move(c.labels)};
  }();
  return cached;
}

}  // namespace

const std::vector<Graph>& petersen_family() { return family().members; }
const std::vector<CanonicalLabel>& petersen_family_labels() { return family().labels; }

}  // namespace linkless::exchange
