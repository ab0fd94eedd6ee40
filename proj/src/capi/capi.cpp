#include <cstring>
#include <string>

#include "capi/documents.hpp"
#include "errors.hpp"
#include "exchange/exchange.hpp"
#include "graph/cycles.hpp"
#include "graph/io.hpp"
#include "kuratowski/web.hpp"
#include "linkless/linkless.h"
#include "minor/minor.hpp"

struct lk_graph {
  linkless::io::LabeledGraph value;
};

namespace {

thread_local std::string last_error;

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const linkless::documents::Json& j) { return j.dump(2) + "\n"; }

template <typename Body>
lk_status guarded(Body&& body) {
  last_error.clear();
  try {
    body();
    return LK_OK;
  } catch (const linkless::ParseError& e) {
    last_error = e.what();
    return LK_ERR_PARSE;
  } catch (const linkless::ResourceError& e) {
    last_error = e.what();
    return LK_ERR_RESOURCE;
  } catch (const linkless::InputError& e) {
    last_error = e.what();
    return LK_ERR_INPUT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LK_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return LK_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw linkless::InputError(std::string(what) + " is null");
}

int cap_or(int cap, int fallback) { return cap > 0 ? cap : fallback; }

}  // namespace

extern "C" {

const char* lk_version(void) { return "1.0.0"; }

const char* lk_last_error(void) { return last_error.c_str(); }

void lk_string_free(char* s) { std::free(s); }

lk_status lk_graph_parse(const char* text, size_t length, lk_format format, lk_graph** out) {
  return guarded([&] {
    require(out, "output handle");
    *out = nullptr;
    if (length > 0) require(text, "text");
    linkless::io::Format f = linkless::io::Format::Auto;
    if (format == LK_FORMAT_EDGE_LIST) f = linkless::io::Format::EdgeList;
    if (format == LK_FORMAT_GRAPH6) f = linkless::io::Format::Graph6;
    auto parsed = linkless::io::parse(std::string_view(text == nullptr ? "" : text, length), f);
    *out = new lk_graph{std::move(parsed)};
  });
}

void lk_graph_free(lk_graph* g) { delete g; }

int lk_graph_vertex_count(const lk_graph* g) { return g == nullptr ? -1 : g->value.graph.vertex_count(); }

int lk_graph_edge_count(const lk_graph* g) { return g == nullptr ? -1 : g->value.graph.edge_count(); }

lk_status lk_graph_to_graph6(const lk_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "output string");
    *out = copy_out(linkless::io::to_graph6(g->value.graph));
  });
}

lk_status lk_decide(const lk_graph* g, int vertex_cap, char** json_out) {
  return guarded([&] {
    require(g, "graph");
    require(json_out, "output string");
    auto verdict = linkless::minor::is_linklessly_embeddable(g->value.graph,
                                                             cap_or(vertex_cap, linkless::minor::kDefaultVertexCap));
    *json_out = copy_out(dump(linkless::documents::decide(g->value, verdict)));
  });
}

lk_status lk_family(char** json_out) {
  return guarded([&] {
    require(json_out, "output string");
    *json_out = copy_out(dump(linkless::documents::family()));
  });
}

lk_status lk_minor(const lk_graph* host, const lk_graph* pattern, int vertex_cap, char** json_out) {
  return guarded([&] {
    require(host, "host graph");
    require(pattern, "pattern graph");
    require(json_out, "output string");
    auto model = linkless::minor::has_minor(host->value.graph, pattern->value.graph,
                                            cap_or(vertex_cap, linkless::minor::kDefaultVertexCap));
    *json_out = copy_out(dump(linkless::documents::minor(host->value, pattern->value.graph, model)));
  });
}

lk_status lk_web(const lk_graph* g, int vertex_cap, char** json_out, char** dot_out) {
  return guarded([&] {
    require(g, "graph");
    require(json_out, "output string");
    const auto simple = linkless::simplify(g->value.graph);
    auto web = linkless::kuratowski::build_web(simple, cap_or(vertex_cap, linkless::kuratowski::kDefaultVertexCap));
    std::string json = dump(linkless::documents::web(g->value, web));
    std::string dot = dot_out != nullptr ? linkless::documents::web_dot(g->value, web) : std::string();
    *json_out = copy_out(json);
    if (dot_out != nullptr) *dot_out = copy_out(dot);
  });
}

lk_status lk_invariant(const lk_graph* g, const lk_diagram_options* options, char** json_out) {
  return guarded([&] {
    namespace dg = linkless::diagram;
    require(g, "graph");
    require(json_out, "output string");
    lk_diagram_options opts{};
    if (options != nullptr) opts = *options;
    const auto& lg = g->value;

    std::vector<linkless::VertexId> order;
    if (opts.order != nullptr && opts.order_length > 0) {
      for (size_t i = 0; i < opts.order_length; ++i) {
        auto it = std::find(lg.labels.begin(), lg.labels.end(), opts.order[i]);
        if (it == lg.labels.end()) throw linkless::InputError("order names unknown vertex " + std::to_string(opts.order[i]));
        order.push_back(static_cast<linkless::VertexId>(it - lg.labels.begin()));
      }
    } else if (opts.assignment_json != nullptr) {
      if (auto from_doc = linkless::documents::read_order(lg, opts.assignment_json)) order = std::move(*from_doc);
    }
    if (order.empty()) order.assign(lg.graph.vertices().begin(), lg.graph.vertices().end());

    dg::OverRule rule = dg::LexicographicOver{};
    if (opts.rule == LK_OVER_RANDOM) rule = dg::RandomOver{opts.seed};
    dg::Diagram d = dg::convex_diagram(lg.graph, order, rule);
    if (opts.assignment_json != nullptr) {
      d = dg::convex_diagram(lg.graph, order, dg::ExplicitOver{linkless::documents::read_assignment(lg, d, opts.assignment_json)});
    }
    const int cap = cap_or(opts.cycle_vertex_cap, linkless::kDefaultCycleVertexCap);
    const auto pairs = dg::disjoint_cycle_pairs(lg.graph, cap);
    dg::Mod2 sum;
    for (const auto& [c1, c2] : pairs) sum += dg::linking_number(d, c1, c2);

    linkless::documents::Json out;
    out["diagram"] = linkless::documents::diagram(lg, d);
    out["disjoint_cycle_pairs"] = pairs.size();
    out["conway_gordon_sum"] = sum.value;
    *json_out = copy_out(dump(out));
  });
}

lk_status lk_cycles(const lk_graph* g, int vertex_cap, char** json_out) {
  return guarded([&] {
    require(g, "graph");
    require(json_out, "output string");
    const auto simple = linkless::simplify(g->value.graph);
    auto list = linkless::enumerate_cycles(simple, cap_or(vertex_cap, linkless::kDefaultCycleVertexCap));
    *json_out = copy_out(dump(linkless::documents::cycles(g->value, list)));
  });
}

}  // extern "C"
