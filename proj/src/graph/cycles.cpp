#include "graph/cycles.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "errors.hpp"
#include "graph/dense.hpp"

namespace linkless {

namespace {

class CycleWalker {
 public:
  CycleWalker(const DenseGraph& d, std::vector<Cycle>& out) : d_(d), out_(out) {}

  void from(int start) {
    start_ = start;
    allowed_ = d_.all() & ~(bit(start + 1) - 1);  // vertices above start
    stack_.assign(1, start);
    extend(bit(start));
  }

 private:
  void extend(VertexMask on_path) {
    const int tail = stack_.back();
    if (stack_.size() >= 3 && d_.has(tail, start_) && stack_[1] < tail) {
      Cycle c;
      for (int v : stack_) c.push_back(d_.label[static_cast<std::size_t>(v)]);
      out_.push_back(std::move(c));
    }
    for (VertexMask m = d_.adj[static_cast<std::size_t>(tail)] & allowed_ & ~on_path; m; m &= m - 1) {
      int next = lowest(m);
      stack_.push_back(next);
      extend(on_path | bit(next));
      stack_.pop_back();
    }
  }

  const DenseGraph& d_;
  std::vector<Cycle>& out_;
  int start_ = 0;
  VertexMask allowed_ = 0;
  std::vector<int> stack_;
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, int vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw ResourceError("cycle enumeration capped at " + std::to_string(vertex_cap) + " vertices, graph has " +
                        std::to_string(g.vertex_count()));
  }
  DenseGraph d = DenseGraph::from(g);
  std::vector<Cycle> out;
  CycleWalker walker(d, out);
  for (int s = 0; s < d.n; ++s) walker.from(s);
  return out;
}

Cycle canonical_cycle(Cycle c) {
  if (c.size() < 3) return c;
  auto least = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), least, c.end());
  if (c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
  if (c.size() < 3) return false;
  std::set<VertexId> seen(c.begin(), c.end());
  if (seen.size() != c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    VertexId a = c[i];
    VertexId b = c[(i + 1) % c.size()];
    if (!g.has_vertex(a) || !g.has_vertex(b) || !g.adjacent(a, b)) return false;
  }
  return true;
}

std::vector<EdgeId> cycle_edges(const Graph& g, const Cycle& c) {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    EdgeId e = g.find_edge(c[i], c[(i + 1) % c.size()]);
    if (e < 0) throw InputError("not a cycle of the graph");
    out.push_back(e);
  }
  return out;
}

}  // namespace linkless
