#include "minor/minor.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "errors.hpp"
#include "exchange/exchange.hpp"
#include "graph/connectivity.hpp"
#include "graph/dense.hpp"

namespace linkless::minor {

namespace {

// Same size: the set holding the least differing vertex comes first.
bool set_order(VertexMask a, VertexMask b) {
  int sa = popcount(a);
  int sb = popcount(b);
  if (sa != sb) return sa < sb;
  if (a == b) return false;
  return (a >> lowest(a ^ b)) & 1U;
}

class BranchSetSearch {
 public:
  BranchSetSearch(const DenseGraph& host, const DenseGraph& pattern) : host_(host), pattern_(pattern) {
    k_ = pattern.n;
    pattern_edges_ = pattern.edge_count();
    build_order();
  }

  // Branch set per pattern vertex (dense), or empty on failure.
  std::vector<VertexMask> run(VertexMask component) {
    component_ = component;
    if (popcount(component) < k_) return {};
    slack_ = host_.edges_inside(component) - pattern_edges_;
    if (slack_ < 0) return {};
    sets_.assign(static_cast<std::size_t>(k_), 0);
    if (!assign(0, 0, 0)) return {};
    std::vector<VertexMask> by_vertex(static_cast<std::size_t>(k_));
    for (int pos = 0; pos < k_; ++pos) {
      by_vertex[static_cast<std::size_t>(order_[static_cast<std::size_t>(pos)])] = sets_[static_cast<std::size_t>(pos)];
    }
    return by_vertex;
  }

 private:
  // Start from a highest-degree vertex, then repeatedly take the vertex with
  // most already-ordered neighbours (ties: higher degree, then lower index).
  void build_order() {
    std::vector<bool> placed(static_cast<std::size_t>(k_), false);
    VertexMask placed_mask = 0;
    for (int step = 0; step < k_; ++step) {
      int best = -1;
      int best_links = -1;
      int best_degree = -1;
      for (int v = 0; v < k_; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int links = popcount(pattern_.adj[static_cast<std::size_t>(v)] & placed_mask);
        int degree = pattern_.degree(v);
        if (links > best_links || (links == best_links && degree > best_degree)) {
          best = v;
          best_links = links;
          best_degree = degree;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      placed_mask |= bit(best);
      order_.push_back(best);
    }
    // Pattern adjacency rewritten over positions.
    adj_pos_.assign(static_cast<std::size_t>(k_), 0);
    for (int a = 0; a < k_; ++a)
      for (int b = 0; b < k_; ++b)
        if (pattern_.has(order_[static_cast<std::size_t>(a)], order_[static_cast<std::size_t>(b)])) {
          adj_pos_[static_cast<std::size_t>(a)] |= bit(b);
        }
  }

  static VertexMask earlier(int pos) { return pos >= 64 ? ~VertexMask{0} : bit(pos) - 1; }

  bool assign(int pos, VertexMask used, int wasted) {
    if (pos == k_) return true;
    const VertexMask free = component_ & ~used;
    const int remaining_after = k_ - pos - 1;
    const int max_size = popcount(free) - remaining_after;
    if (max_size <= 0) return false;

    const VertexMask assigned_nbrs = adj_pos_[static_cast<std::size_t>(pos)] & earlier(pos);
    const int later_nbrs = popcount(adj_pos_[static_cast<std::size_t>(pos)] & ~earlier(pos + 1));

    std::vector<VertexMask> candidates;
    auto consider = [&](VertexMask s) {
      const VertexMask left = free & ~s;
      if (popcount(left) < remaining_after) return;
      const VertexMask around = host_.neighborhood(s);
      int waste = host_.edges_inside(s);
      for (int q = 0; q < pos; ++q) {
        const VertexMask set_q = sets_[static_cast<std::size_t>(q)];
        const bool linked = (assigned_nbrs >> q) & 1U;
        if (linked && !(around & set_q)) return;
        waste += host_.edges_between(s, set_q) - (linked ? 1 : 0);
      }
      if (wasted + waste > slack_) return;
      if (popcount(around & left) < later_nbrs) return;
      // Every placed vertex still needs distinct free neighbours for its
      // unplaced pattern neighbours.
      for (int q = 0; q <= pos; ++q) {
        const int pending = popcount(adj_pos_[static_cast<std::size_t>(q)] & ~earlier(pos + 1));
        if (pending == 0) continue;
        const VertexMask set_q = q == pos ? s : sets_[static_cast<std::size_t>(q)];
        if (popcount(host_.neighborhood(set_q) & left) < pending) return;
      }
      candidates.push_back(s);
    };

    if (pos == 0) {
      for (VertexMask roots = free; roots; roots &= roots - 1) {
        const int r = lowest(roots);
        const VertexMask allowed = free & ~(bit(r) - 1);
        grow(bit(r), host_.adj[static_cast<std::size_t>(r)] & allowed, allowed, max_size, consider);
      }
    } else {
      const int anchor = lowest(assigned_nbrs);
      const VertexMask touching = host_.neighborhood(sets_[static_cast<std::size_t>(anchor)]) & free;
      for (VertexMask roots = touching; roots; roots &= roots - 1) {
        const int r = lowest(roots);
        const VertexMask allowed = free & ~(touching & (bit(r) - 1));
        grow(bit(r), host_.adj[static_cast<std::size_t>(r)] & allowed, allowed, max_size, consider);
      }
    }

    std::sort(candidates.begin(), candidates.end(), set_order);
    for (VertexMask s : candidates) {
      int waste = host_.edges_inside(s);
      for (int q = 0; q < pos; ++q) {
        waste += host_.edges_between(s, sets_[static_cast<std::size_t>(q)]) - static_cast<int>((assigned_nbrs >> q) & 1U);
      }
      sets_[static_cast<std::size_t>(pos)] = s;
      if (assign(pos + 1, used | s, wasted + waste)) return true;
    }
    sets_[static_cast<std::size_t>(pos)] = 0;
    return false;
  }

  // Emits every connected set containing `set` and contained in `allowed`
  // with at most max_size vertices, each exactly once.
  template <typename Emit>
  void grow(VertexMask set, VertexMask frontier, VertexMask allowed, int max_size, Emit& emit) const {
    frontier &= allowed & ~set;
    if (frontier == 0 || popcount(set) == max_size) {
      emit(set);
      return;
    }
    const int w = lowest(frontier);
    grow(set | bit(w), frontier | host_.adj[static_cast<std::size_t>(w)], allowed, max_size, emit);
    grow(set, frontier & ~bit(w), allowed & ~bit(w), max_size, emit);
  }

  const DenseGraph& host_;
  const DenseGraph& pattern_;
  int k_ = 0;
  int pattern_edges_ = 0;
  std::vector<int> order_;
  std::vector<VertexMask> adj_pos_;
  VertexMask component_ = 0;
  int slack_ = 0;
  std::vector<VertexMask> sets_;
};

}  // namespace

std::optional<MinorModel> has_minor(const Graph& host, const Graph& pattern, int vertex_cap) {
  if (host.vertex_count() > vertex_cap) {
    throw ResourceError("minor search capped at " + std::to_string(vertex_cap) + " host vertices, got " +
                        std::to_string(host.vertex_count()));
  }
  if (!pattern.is_simple()) throw InputError("minor pattern must be simple");
  if (!is_connected(pattern)) throw InputError("minor pattern must be connected");

  const Graph h = simplify(host);
  const DenseGraph dh = DenseGraph::from(h);
  const DenseGraph dp = DenseGraph::from(pattern);

  MinorModel model;
  if (dp.n == 0) return model;
  if (dp.n > dh.n || dp.edge_count() > dh.edge_count()) return std::nullopt;

  BranchSetSearch search(dh, dp);
  std::vector<VertexMask> sets;
  VertexMask left = dh.all();
  while (left && sets.empty()) {
    VertexMask comp = dh.reach(lowest(left), left);
    left &= ~comp;
    sets = search.run(comp);
  }
  if (sets.empty()) return std::nullopt;

  std::vector<int> owner(static_cast<std::size_t>(dh.n), -1);
  for (int p = 0; p < dp.n; ++p) {
    std::vector<VertexId>& branch = model.branch_sets[dp.label[static_cast<std::size_t>(p)]];
    for (VertexMask m = sets[static_cast<std::size_t>(p)]; m; m &= m - 1) {
      branch.push_back(dh.label[static_cast<std::size_t>(lowest(m))]);
      owner[static_cast<std::size_t>(lowest(m))] = p;
    }
  }
  for (const Edge& pe : pattern.edges()) {
    const int a = pattern.vertex_index(pe.u);
    const int b = pattern.vertex_index(pe.v);
    for (const Edge& he : h.edges()) {
      const int oa = owner[static_cast<std::size_t>(h.vertex_index(he.u))];
      const int ob = owner[static_cast<std::size_t>(h.vertex_index(he.v))];
      if ((oa == a && ob == b) || (oa == b && ob == a)) {
        model.edge_map[pe.id] = he.id;
        break;
      }
    }
  }
  return model;
}

bool verify_minor_model(const Graph& host, const Graph& pattern, const MinorModel& model) {
  for (const Edge& e : pattern.edges())
    if (e.is_loop()) return false;
  if (model.branch_sets.size() != static_cast<std::size_t>(pattern.vertex_count())) return false;

  std::map<VertexId, VertexId> owner;  // host vertex -> pattern vertex
  for (const auto& [p, branch] : model.branch_sets) {
    if (!pattern.has_vertex(p) || branch.empty()) return false;
    for (VertexId v : branch) {
      if (!host.has_vertex(v) || !owner.emplace(v, p).second) return false;
    }
    // Connected within the host.
    std::set<VertexId> members(branch.begin(), branch.end());
    std::set<VertexId> seen{branch.front()};
    std::vector<VertexId> stack{branch.front()};
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : host.neighbors(x)) {
        if (members.contains(y) && seen.insert(y).second) stack.push_back(y);
      }
    }
    if (seen.size() != members.size()) return false;
  }

  if (model.edge_map.size() != static_cast<std::size_t>(pattern.edge_count())) return false;
  std::set<EdgeId> images;
  for (const auto& [pe_id, he_id] : model.edge_map) {
    if (!pattern.has_edge(pe_id) || !host.has_edge(he_id) || !images.insert(he_id).second) return false;
    const Edge& pe = pattern.edge(pe_id);
    const Edge& he = host.edge(he_id);
    auto ou = owner.find(he.u);
    auto ov = owner.find(he.v);
    if (ou == owner.end() || ov == owner.end()) return false;
    const bool straight = ou->second == pe.u && ov->second == pe.v;
    const bool crossed = ou->second == pe.v && ov->second == pe.u;
    if (!straight && !crossed) return false;
  }
  return true;
}

LinklessVerdict is_linklessly_embeddable(const Graph& g, int vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw ResourceError("linkless decision capped at " + std::to_string(vertex_cap) + " vertices, got " +
                        std::to_string(g.vertex_count()));
  }
  const Graph simple = simplify(g);
  const auto& family = exchange::petersen_family();
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (auto model = has_minor(simple, family[i], vertex_cap)) {
      return {false, static_cast<int>(i) + 1, std::move(model)};
    }
  }
  return {};
}

}  // namespace linkless::minor
