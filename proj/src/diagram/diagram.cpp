#include "diagram/diagram.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <unordered_map>

#include "errors.hpp"
#include "graph/dense.hpp"

namespace linkless::diagram {

namespace {

std::vector<int> positions(const Graph& g, std::span<const VertexId> order) {
  if (static_cast<int>(order.size()) != g.vertex_count()) throw InputError("vertex order has the wrong length");
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int idx = g.vertex_index(order[i]);
    if (idx < 0 || pos[static_cast<std::size_t>(idx)] >= 0) throw InputError("vertex order is not a permutation");
    pos[static_cast<std::size_t>(idx)] = static_cast<int>(i);
  }
  return pos;
}

bool lex_less(const Edge& e, const Edge& f) { return std::pair{e.u, e.v} < std::pair{f.u, f.v}; }

std::set<EdgeId> edge_set_of(const Diagram& d, const Cycle& c) {
  auto ids = cycle_edges(d.graph, c);
  return {ids.begin(), ids.end()};
}

void check_disjoint_cycles(const Diagram& d, const Cycle& c1, const Cycle& c2) {
  if (!is_cycle_of(d.graph, c1) || !is_cycle_of(d.graph, c2)) throw InputError("not a cycle of the diagram graph");
  std::set<VertexId> a(c1.begin(), c1.end());
  for (VertexId v : c2)
    if (a.contains(v)) throw InputError("cycles share vertex " + std::to_string(v));
}

}  // namespace

bool chords_cross(std::span<const int> position, const Edge& e, const Edge& f) {
  if (e.touches(f.u) || e.touches(f.v)) return false;
  auto at = [&](VertexId v) { return position[static_cast<std::size_t>(v)]; };
  const int lo = std::min(at(e.u), at(e.v));
  const int hi = std::max(at(e.u), at(e.v));
  auto inside = [&](int p) { return lo < p && p < hi; };
  return inside(at(f.u)) != inside(at(f.v));
}

Diagram convex_diagram(const Graph& g, std::span<const VertexId> order, const OverRule& rule) {
  for (const Edge& e : g.edges())
    if (e.is_loop()) throw InputError("diagrams exclude loops");
  if (!g.is_simple()) throw InputError("diagrams exclude parallel edges");

  const std::vector<int> by_index = positions(g, order);
  // chords_cross takes positions indexed by vertex id; build that view.
  const VertexId max_id = g.vertices().empty() ? 0 : g.vertices().back();
  std::vector<int> pos(static_cast<std::size_t>(max_id) + 1, -1);
  for (int i = 0; i < g.vertex_count(); ++i) pos[static_cast<std::size_t>(g.vertices()[static_cast<std::size_t>(i)])] = by_index[static_cast<std::size_t>(i)];

  Diagram d{g, {order.begin(), order.end()}, {}};
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (chords_cross(pos, edges[i], edges[j])) d.crossings.push_back({edges[i].id, edges[j].id, Over::A});
    }
  }

  if (std::holds_alternative<LexicographicOver>(rule)) {
    for (Crossing& c : d.crossings) c.over = lex_less(g.edge(c.a), g.edge(c.b)) ? Over::A : Over::B;
  } else if (const auto* r = std::get_if<RandomOver>(&rule)) {
    std::mt19937_64 gen(r->seed);
    for (Crossing& c : d.crossings) c.over = (gen() & 1U) ? Over::B : Over::A;
  } else {
    const auto& choices = std::get<ExplicitOver>(rule).choices;
    if (choices.size() != d.crossings.size()) {
      throw InputError("explicit over assignment has " + std::to_string(choices.size()) + " entries for " +
                       std::to_string(d.crossings.size()) + " crossings");
    }
    for (std::size_t i = 0; i < choices.size(); ++i) d.crossings[i].over = choices[i];
  }
  return d;
}

Diagram convex_diagram(const Graph& g, const OverRule& rule) {
  std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
  return convex_diagram(g, order, rule);
}

Diagram crossing_change(const Diagram& d, std::size_t index) {
  if (index >= d.crossings.size()) throw InputError("crossing index " + std::to_string(index) + " out of range");
  Diagram out = d;
  Crossing& c = out.crossings[index];
  c.over = c.over == Over::A ? Over::B : Over::A;
  return out;
}

bool validate(const Diagram& d) {
  try {
    std::vector<Over> overs;
    for (const Crossing& c : d.crossings) overs.push_back(c.over);
    Diagram fresh = convex_diagram(d.graph, d.order, ExplicitOver{overs});
    return fresh.crossings == d.crossings;
  } catch (const InputError&) {
    return false;
  }
}

Mod2 linking_number(const Diagram& d, const Cycle& c1, const Cycle& c2) {
  check_disjoint_cycles(d, c1, c2);
  const auto e1 = edge_set_of(d, c1);
  const auto e2 = edge_set_of(d, c2);
  int count = 0;
  for (const Crossing& c : d.crossings) {
    if (e1.contains(c.over_edge()) && e2.contains(c.under_edge())) ++count;
  }
  return Mod2(count);
}

int inter_crossings(const Diagram& d, const Cycle& c1, const Cycle& c2) {
  check_disjoint_cycles(d, c1, c2);
  const auto e1 = edge_set_of(d, c1);
  const auto e2 = edge_set_of(d, c2);
  int count = 0;
  for (const Crossing& c : d.crossings) {
    if ((e1.contains(c.a) && e2.contains(c.b)) || (e1.contains(c.b) && e2.contains(c.a))) ++count;
  }
  return count;
}

std::vector<CyclePair> disjoint_cycle_pairs(const Graph& g, int vertex_cap) {
  const std::vector<Cycle> cycles = enumerate_cycles(g, vertex_cap);
  const DenseGraph d = DenseGraph::from(g);
  std::vector<VertexMask> masks;
  std::unordered_map<VertexMask, std::vector<std::size_t>> by_mask;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    VertexMask m = 0;
    for (VertexId v : cycles[i]) m |= bit(g.vertex_index(v));
    masks.push_back(m);
    by_mask[m].push_back(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> index_pairs;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const VertexMask rest = d.all() & ~masks[i];
    // Every submask of the complement with at least three vertices.
    for (VertexMask sub = rest; sub; sub = (sub - 1) & rest) {
      if (popcount(sub) < 3) continue;
      auto it = by_mask.find(sub);
      if (it == by_mask.end()) continue;
      for (std::size_t j : it->second)
        if (j > i) index_pairs.emplace_back(i, j);
    }
  }
  std::sort(index_pairs.begin(), index_pairs.end());
  std::vector<CyclePair> out;
  out.reserve(index_pairs.size());
  for (auto [i, j] : index_pairs) out.emplace_back(cycles[i], cycles[j]);
  return out;
}

Mod2 conway_gordon_sum(const Diagram& d, int vertex_cap) {
  Mod2 total;
  for (const auto& [c1, c2] : disjoint_cycle_pairs(d.graph, vertex_cap)) total += linking_number(d, c1, c2);
  return total;
}

}  // namespace linkless::diagram
