#include "capi/documents.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "errors.hpp"
#include "exchange/exchange.hpp"
#include "graph/connectivity.hpp"

namespace linkless::documents {

namespace {

Json label_list(const io::LabeledGraph& g, const std::vector<VertexId>& vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(g.label_of(v));
  return out;
}

Json model_body(const io::LabeledGraph& host, const Graph& pattern, const minor::MinorModel& m, Json out) {
  Json sets = Json::array();
  for (VertexId p : pattern.vertices()) {
    std::vector<VertexId> branch = m.branch_sets.at(p);
    std::sort(branch.begin(), branch.end());
    sets.push_back(label_list(host, branch));
  }
  Json edges = Json::array();
  for (const Edge& pe : pattern.edges()) {
    const Edge& he = host.graph.edge(m.edge_map.at(pe.id));
    edges.push_back(Json::array({host.label_of(he.u), host.label_of(he.v)}));
  }
  out["branch_sets"] = std::move(sets);
  out["edge_map"] = std::move(edges);
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("assignment JSON: ") + e.what(), e.byte);
  }
}

}  // namespace

Json decide(const io::LabeledGraph& g, const minor::LinklessVerdict& verdict) {
  Json out;
  out["embeddable"] = verdict.embeddable;
  if (verdict.embeddable) {
    out["family_member"] = nullptr;
    out["branch_sets"] = Json::array();
    out["edge_map"] = Json::array();
    return out;
  }
  out["family_member"] = verdict.family_member;
  const Graph& member = exchange::petersen_family().at(static_cast<std::size_t>(verdict.family_member - 1));
  return model_body(g, member, *verdict.witness, std::move(out));
}

Json minor(const io::LabeledGraph& host, const Graph& pattern, const std::optional<minor::MinorModel>& model) {
  Json out;
  out["is_minor"] = model.has_value();
  if (!model) {
    out["branch_sets"] = Json::array();
    out["edge_map"] = Json::array();
    return out;
  }
  return model_body(host, pattern, *model, std::move(out));
}

Json family() {
  Json members = Json::array();
  const auto& fam = exchange::petersen_family();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    Json m;
    m["index"] = i + 1;
    m["graph6"] = io::to_graph6(fam[i]);
    m["vertices"] = fam[i].vertex_count();
    m["edges"] = fam[i].edge_count();
    m["degree_sequence"] = degree_sequence(fam[i]);
    members.push_back(std::move(m));
  }
  Json out;
  out["members"] = std::move(members);
  return out;
}

Json web(const io::LabeledGraph& g, const kuratowski::KuratowskiWeb& w) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < w.nodes.size(); ++i) {
    const SubdivisionModel& m = w.nodes[i];
    Json node;
    node["index"] = i;
    node["kind"] = std::string(to_string(m.kind));
    node["branch_vertices"] = label_list(g, m.branch_vertices);
    Json edges = Json::array();
    for (EdgeId id : m.edge_set) {
      const Edge& e = g.graph.edge(id);
      edges.push_back(Json::array({g.label_of(e.u), g.label_of(e.v)}));
    }
    node["edges"] = std::move(edges);
    nodes.push_back(std::move(node));
  }
  Json adjacency = Json::array();
  for (const auto& e : w.edges) {
    adjacency.push_back(Json{{"a", e.a}, {"b", e.b}, {"label", std::string(kuratowski::to_string(e.label))}});
  }
  Json out;
  out["node_count"] = w.nodes.size();
  out["nodes"] = std::move(nodes);
  out["adjacency"] = std::move(adjacency);
  out["connected"] = kuratowski::is_connected_web(w);
  out["vertex_connectivity"] = vertex_connectivity(g.graph);
  return out;
}

std::string web_dot(const io::LabeledGraph& g, const kuratowski::KuratowskiWeb& w) {
  std::ostringstream os;
  os << "graph kuratowski_web {\n";
  for (std::size_t i = 0; i < w.nodes.size(); ++i) {
    const SubdivisionModel& m = w.nodes[i];
    os << "  n" << i << " [label=\"" << to_string(m.kind);
    for (std::size_t k = 0; k < m.branch_vertices.size(); ++k) {
      os << (k == 0 ? " " : ",") << g.label_of(m.branch_vertices[k]);
    }
    os << "\"];\n";
  }
  for (const auto& e : w.edges) {
    os << "  n" << e.a << " -- n" << e.b << " [label=\"" << kuratowski::to_string(e.label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Json diagram(const io::LabeledGraph& g, const diagram::Diagram& d) {
  Json crossings = Json::array();
  for (const auto& c : d.crossings) {
    crossings.push_back(Json{{"a", c.a}, {"b", c.b}, {"over", c.over == diagram::Over::A ? "a" : "b"}});
  }
  Json out;
  out["order"] = label_list(g, d.order);
  out["crossings"] = std::move(crossings);
  return out;
}

Json cycles(const io::LabeledGraph& g, const std::vector<Cycle>& list) {
  Json arr = Json::array();
  for (const Cycle& c : list) arr.push_back(label_list(g, c));
  Json out;
  out["count"] = list.size();
  out["cycles"] = std::move(arr);
  return out;
}

std::optional<std::vector<VertexId>> read_order(const io::LabeledGraph& g, std::string_view text) {
  Json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("order")) return std::nullopt;
  std::map<std::int64_t, VertexId> dense;
  for (std::size_t i = 0; i < g.labels.size(); ++i) dense[g.labels[i]] = static_cast<VertexId>(i);
  std::vector<VertexId> order;
  try {
    for (const auto& x : doc.at("order")) {
      auto it = dense.find(x.get<std::int64_t>());
      if (it == dense.end()) throw InputError("assignment order names an unknown vertex");
      order.push_back(it->second);
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("assignment order: ") + e.what(), 0);
  }
  return order;
}

std::vector<diagram::Over> read_assignment(const io::LabeledGraph&, const diagram::Diagram& d, std::string_view text) {
  Json doc = parse_json(text);
  std::map<std::pair<EdgeId, EdgeId>, EdgeId> over_of;  // unordered pair -> over edge
  try {
    for (const auto& c : doc.at("crossings")) {
      EdgeId a = c.at("a").get<EdgeId>();
      EdgeId b = c.at("b").get<EdgeId>();
      std::string over = c.at("over").get<std::string>();
      if (over != "a" && over != "b") throw InputError("crossing 'over' must be \"a\" or \"b\"");
      if (!over_of.emplace(std::minmax(a, b), over == "a" ? a : b).second) {
        throw InputError("assignment lists a crossing twice");
      }
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("assignment crossings: ") + e.what(), 0);
  }
  if (over_of.size() != d.crossings.size()) throw InputError("assignment crossings do not match the diagram");
  std::vector<diagram::Over> choices;
  for (const auto& c : d.crossings) {
    auto it = over_of.find(std::minmax(c.a, c.b));
    if (it == over_of.end()) throw InputError("assignment misses a crossing of the diagram");
    choices.push_back(it->second == c.a ? diagram::Over::A : diagram::Over::B);
  }
  return choices;
}

}  // namespace linkless::documents
