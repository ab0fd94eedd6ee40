#include "kuratowski/web.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "errors.hpp"
#include "graph/dense.hpp"

namespace linkless::kuratowski {

namespace {

// Routes the branch paths of one pattern in order, emitting every system of
// internally disjoint paths.
class PathRouter {
 public:
  PathRouter(const Graph& g, const DenseGraph& d, std::vector<SubdivisionModel>& out)
      : g_(g), d_(d), out_(out) {}

  void route(KuratowskiKind kind, const std::vector<int>& branch) {
    kind_ = kind;
    branch_ = branch;
    VertexMask branch_mask = 0;
    for (int b : branch) branch_mask |= bit(b);
    paths_.clear();
    next_pair(0, d_.all() & ~branch_mask);
  }

 private:
  void next_pair(std::size_t k, VertexMask free) {
    auto pattern = pattern_edges(kind_);
    if (k == pattern.size()) {
      emit();
      return;
    }
    const int from = branch_[static_cast<std::size_t>(pattern[k].first)];
    const int to = branch_[static_cast<std::size_t>(pattern[k].second)];
    std::vector<int> walk{from};
    extend(k, to, free, walk);
  }

  void extend(std::size_t k, int to, VertexMask free, std::vector<int>& walk) {
    const int tail = walk.back();
    if (d_.has(tail, to)) {
      walk.push_back(to);
      paths_.push_back(walk);
      next_pair(k + 1, free);
      paths_.pop_back();
      walk.pop_back();
    }
    for (VertexMask m = d_.adj[static_cast<std::size_t>(tail)] & free; m; m &= m - 1) {
      const int next = lowest(m);
      walk.push_back(next);
      extend(k, to, free & ~bit(next), walk);
      walk.pop_back();
    }
  }

  void emit() {
    SubdivisionModel m;
    m.kind = kind_;
    for (int b : branch_) m.branch_vertices.push_back(d_.label[static_cast<std::size_t>(b)]);
    for (const auto& walk : paths_) {
      Path p;
      for (std::size_t i = 0; i < walk.size(); ++i) {
        p.push_back(d_.label[static_cast<std::size_t>(walk[i])]);
        if (i > 0) m.edge_set.push_back(g_.find_edge(p[i - 1], p[i]));
      }
      m.paths.push_back(std::move(p));
    }
    std::sort(m.edge_set.begin(), m.edge_set.end());
    out_.push_back(std::move(m));
  }

  const Graph& g_;
  const DenseGraph& d_;
  std::vector<SubdivisionModel>& out_;
  KuratowskiKind kind_ = KuratowskiKind::K5;
  std::vector<int> branch_;
  std::vector<std::vector<int>> paths_;
};

template <typename Visit>
void for_each_subset(const std::vector<int>& pool, std::size_t size, Visit&& visit) {
  std::vector<int> chosen;
  auto rec = [&](auto& self, std::size_t start) -> void {
    if (chosen.size() == size) {
      visit(chosen);
      return;
    }
    for (std::size_t i = start; i + (size - chosen.size()) <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

std::set<VertexId> vertex_set(const SubdivisionModel& m) {
  auto v = model_vertices(m);
  return {v.begin(), v.end()};
}

// Outside vertices give a connection between two distinct vertices of base
// through an edge not in base.
bool has_ear(const Graph& g, const SubdivisionModel& base) {
  const std::set<VertexId> on_base = vertex_set(base);
  const std::set<EdgeId> base_edges(base.edge_set.begin(), base.edge_set.end());
  for (const Edge& e : g.edges()) {
    if (!e.is_loop() && on_base.contains(e.u) && on_base.contains(e.v) && !base_edges.contains(e.id)) return true;
  }
  std::set<VertexId> done;
  for (VertexId start : g.vertices()) {
    if (on_base.contains(start) || done.contains(start)) continue;
    std::set<VertexId> attachments;
    std::vector<VertexId> stack{start};
    done.insert(start);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (on_base.contains(y)) {
          attachments.insert(y);
        } else if (done.insert(y).second) {
          stack.push_back(y);
        }
      }
    }
    if (attachments.size() >= 2) return true;
  }
  return false;
}

// other lies in base + P for a suitable path P. Interior vertices of P are
// off base, so `other` (minimum degree 2) uses either all of P or none of it;
// hence the edges of other missing from base must be exactly P.
bool one_adjacent_over(const Graph& g, const SubdivisionModel& base, const SubdivisionModel& other) {
  std::vector<EdgeId> extra;
  std::set_difference(other.edge_set.begin(), other.edge_set.end(), base.edge_set.begin(), base.edge_set.end(),
                      std::back_inserter(extra));
  if (extra.empty()) return has_ear(g, base);

  std::map<VertexId, std::vector<VertexId>> incident;
  for (EdgeId id : extra) {
    const Edge& e = g.edge(id);
    incident[e.u].push_back(e.v);
    incident[e.v].push_back(e.u);
  }
  if (incident.size() != extra.size() + 1) return false;
  const std::set<VertexId> on_base = vertex_set(base);
  std::vector<VertexId> ends;
  for (const auto& [v, nbrs] : incident) {
    if (nbrs.size() == 1) {
      ends.push_back(v);
      if (!on_base.contains(v)) return false;
    } else if (nbrs.size() == 2) {
      if (on_base.contains(v)) return false;
    } else {
      return false;
    }
  }
  if (ends.size() != 2) return false;
  // Connected: walk from one end.
  std::set<VertexId> seen{ends[0]};
  std::vector<VertexId> stack{ends[0]};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : incident[x])
      if (seen.insert(y).second) stack.push_back(y);
  }
  return seen.size() == incident.size();
}

// Branch path between branch vertices x and y, oriented x -> y.
Path branch_path(const SubdivisionModel& m, VertexId x, VertexId y) {
  auto pattern = pattern_edges(m.kind);
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    VertexId a = m.branch_vertices[static_cast<std::size_t>(pattern[k].first)];
    VertexId b = m.branch_vertices[static_cast<std::size_t>(pattern[k].second)];
    if (a == x && b == y) return m.paths[k];
    if (a == y && b == x) return {m.paths[k].rbegin(), m.paths[k].rend()};
  }
  return {};
}

std::vector<VertexId> side(const SubdivisionModel& m, int which) {
  auto first = m.branch_vertices.begin() + 3 * which;
  std::vector<VertexId> out(first, first + 3);
  std::sort(out.begin(), out.end());
  return out;
}

bool disjoint_except_ends(const Path& p, const Path& q) {
  std::set<VertexId> shared_ends;
  for (VertexId a : {p.front(), p.back()})
    if (a == q.front() || a == q.back()) shared_ends.insert(a);
  std::set<VertexId> pv(p.begin(), p.end());
  for (VertexId v : q)
    if (pv.contains(v) && !shared_ends.contains(v)) return false;
  return true;
}

}  // namespace

std::vector<SubdivisionModel> enumerate_kuratowski_subgraphs(const Graph& g, int vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw ResourceError("Kuratowski enumeration capped at " + std::to_string(vertex_cap) + " vertices, got " +
                        std::to_string(g.vertex_count()));
  }
  if (!g.is_simple()) throw InputError("Kuratowski enumeration needs a simple graph");
  const DenseGraph d = DenseGraph::from(g);
  std::vector<SubdivisionModel> out;
  PathRouter router(g, d, out);

  std::vector<int> deg4;
  std::vector<int> deg3;
  for (int v = 0; v < d.n; ++v) {
    if (d.degree(v) >= 4) deg4.push_back(v);
    if (d.degree(v) >= 3) deg3.push_back(v);
  }
  for_each_subset(deg4, 5, [&](const std::vector<int>& five) { router.route(KuratowskiKind::K5, five); });
  for_each_subset(deg3, 6, [&](const std::vector<int>& six) {
    std::vector<int> rest(six.begin() + 1, six.end());
    for_each_subset(rest, 2, [&](const std::vector<int>& pair) {
      std::vector<int> a{six[0], pair[0], pair[1]};
      std::vector<int> b;
      for (int v : rest)
        if (v != pair[0] && v != pair[1]) b.push_back(v);
      a.insert(a.end(), b.begin(), b.end());
      router.route(KuratowskiKind::K33, a);
    });
  });

  std::set<std::vector<EdgeId>> distinct;
  for (const auto& m : out) {
    if (!distinct.insert(m.edge_set).second) throw std::logic_error("Kuratowski subgraph enumerated twice");
  }
  return out;
}

bool is_1_adjacent(const Graph& g, const SubdivisionModel& h1, const SubdivisionModel& h2) {
  return one_adjacent_over(g, h1, h2) || one_adjacent_over(g, h2, h1);
}

bool is_2_adjacent(const Graph& g, const SubdivisionModel& h1, const SubdivisionModel& h2) {
  if (h1.kind != KuratowskiKind::K33 || h2.kind != KuratowskiKind::K33) return false;
  for (int outer = 0; outer < 2; ++outer) {
    // outer side of H1 plays u5, u6, u7.
    const std::vector<VertexId> cols = side(h1, outer);
    const std::vector<VertexId> rows1 = side(h1, 1 - outer);
    int outer2 = -1;
    for (int s = 0; s < 2; ++s)
      if (side(h2, s) == cols) outer2 = s;
    if (outer2 < 0) continue;
    const std::vector<VertexId> rows2 = side(h2, 1 - outer2);

    std::vector<VertexId> common;
    std::set_intersection(rows1.begin(), rows1.end(), rows2.begin(), rows2.end(), std::back_inserter(common));
    if (common.size() != 2) continue;
    VertexId u2 = -1;
    VertexId u1 = -1;
    for (VertexId v : rows1)
      if (!std::binary_search(common.begin(), common.end(), v)) u2 = v;
    for (VertexId v : rows2)
      if (!std::binary_search(common.begin(), common.end(), v)) u1 = v;

    std::vector<Path> system;
    bool shared_rows = true;
    for (VertexId r : common) {
      for (VertexId c : cols) {
        Path p1 = branch_path(h1, r, c);
        if (p1 != branch_path(h2, r, c)) shared_rows = false;
        system.push_back(std::move(p1));
      }
    }
    if (!shared_rows) continue;
    for (VertexId c : cols) {
      system.push_back(branch_path(h1, u2, c));
      system.push_back(branch_path(h2, u1, c));
    }
    bool disjoint = true;
    for (std::size_t a = 0; a < system.size() && disjoint; ++a)
      for (std::size_t b = a + 1; b < system.size() && disjoint; ++b)
        disjoint = disjoint_except_ends(system[a], system[b]);
    if (!disjoint) continue;

    // L_34 between the two shared row vertices, avoiding the other twelve paths.
    std::set<VertexId> blocked;
    for (const Path& p : system) blocked.insert(p.begin(), p.end());
    const VertexId u3 = common[0];
    const VertexId u4 = common[1];
    blocked.erase(u4);
    std::set<VertexId> seen{u3};
    std::vector<VertexId> stack{u3};
    bool found = false;
    while (!stack.empty() && !found) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : g.neighbors(x)) {
        if (y == u4) {
          found = true;
          break;
        }
        if (!blocked.contains(y) && seen.insert(y).second) stack.push_back(y);
      }
    }
    if (found) return true;
  }
  return false;
}

std::string_view to_string(Adjacency a) {
  switch (a) {
    case Adjacency::One:
      return "1";
    case Adjacency::Two:
      return "2";
    case Adjacency::Both:
      return "both";
  }
  return "?";
}

KuratowskiWeb build_web(const Graph& g, int vertex_cap) {
  KuratowskiWeb w;
  w.nodes = enumerate_kuratowski_subgraphs(g, vertex_cap);
  const int n = static_cast<int>(w.nodes.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const auto& ha = w.nodes[static_cast<std::size_t>(a)];
      const auto& hb = w.nodes[static_cast<std::size_t>(b)];
      const bool one = is_1_adjacent(g, ha, hb);
      const bool two = is_2_adjacent(g, ha, hb);
      if (one || two) w.edges.push_back({a, b, one && two ? Adjacency::Both : (one ? Adjacency::One : Adjacency::Two)});
    }
  }
  return w;
}

bool is_connected_web(const KuratowskiWeb& w) {
  const std::size_t n = w.nodes.size();
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = n;
  for (const WebEdge& e : w.edges) {
    auto ra = find(static_cast<std::size_t>(e.a));
    auto rb = find(static_cast<std::size_t>(e.b));
    if (ra != rb) {
      parent[ra] = rb;
      --parts;
    }
  }
  return parts == 1;
}

}  // namespace linkless::kuratowski
