#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graph/graph.hpp"

namespace linkless::io {

enum class Format { Auto, EdgeList, Graph6 };

// A parsed graph on dense vertices 0..n-1 together with the integer each
// dense vertex had in the source text.
struct LabeledGraph {
  Graph graph;
  std::vector<std::int64_t> labels;

  std::int64_t label_of(VertexId v) const { return labels.at(static_cast<std::size_t>(v)); }
};

// One edge per line, two non-negative integers; '#' starts a comment.
// Distinct labels are mapped to 0..n-1 in increasing numeric order and edges
// keep their line order as ids.
LabeledGraph parse_edge_list(std::string_view text);

// Single graph6 string (optional ">>graph6<<" header and trailing newline).
Graph parse_graph6(std::string_view text);
// Every non-empty line of a graph6 file.
std::vector<Graph> parse_graph6_lines(std::string_view text);

// Throws InputError if g is not simple.
std::string to_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

// Graph6 when the first content line is a single token, edge list otherwise.
Format detect_format(std::string_view text);
LabeledGraph parse(std::string_view text, Format format);

}  // namespace linkless::io
