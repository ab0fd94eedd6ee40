#include "graph/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <iterator>
#include <stdexcept>

namespace linkless {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

struct Converted {
  BoostGraph graph;
  std::vector<EdgeId> edge_of;  // boost edge index -> our edge id
};

Converted convert(const Graph& g, const std::vector<EdgeId>& keep) {
  Converted c{BoostGraph(static_cast<std::size_t>(g.vertex_count())), {}};
  for (EdgeId id : keep) {
    const Edge& e = g.edge(id);
    auto [be, ok] = boost::add_edge(static_cast<std::size_t>(g.vertex_index(e.u)),
                                    static_cast<std::size_t>(g.vertex_index(e.v)), c.graph);
    (void)ok;
    boost::put(boost::edge_index, c.graph, be, static_cast<int>(c.edge_of.size()));
    c.edge_of.push_back(id);
  }
  return c;
}

bool planar_edges(const Graph& g, const std::vector<EdgeId>& keep) {
  Converted c = convert(g, keep);
  return boost::boyer_myrvold_planarity_test(c.graph);
}

}  // namespace

PlanarityVerdict is_planar(const Graph& input) {
  const Graph g = simplify(input);
  std::vector<EdgeId> all;
  for (const Edge& e : g.edges()) all.push_back(e.id);

  Converted c = convert(g, all);
  std::vector<boost::graph_traits<BoostGraph>::edge_descriptor> kuratowski;
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = c.graph,
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (planar) return {};

  std::vector<EdgeId> ids;
  for (auto be : kuratowski) ids.push_back(c.edge_of[static_cast<std::size_t>(boost::get(boost::edge_index, c.graph, be))]);
  std::sort(ids.begin(), ids.end());
  auto model = subdivision_from_edges(g, ids);
  if (!model) {
    // Edge-minimal nonplanar subgraphs are Kuratowski subgraphs.
    std::vector<EdgeId> rest = all;
    for (EdgeId id : all) {
      std::vector<EdgeId> trial;
      for (EdgeId r : rest)
        if (r != id) trial.push_back(r);
      if (!planar_edges(g, trial)) rest = std::move(trial);
    }
    model = subdivision_from_edges(g, rest);
    if (!model) throw std::logic_error("nonplanar graph without extractable Kuratowski subgraph");
  }
  return {false, std::move(model)};
}

}  // namespace linkless
