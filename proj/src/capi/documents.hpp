#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "diagram/diagram.hpp"
#include "graph/io.hpp"
#include "kuratowski/web.hpp"
#include "minor/minor.hpp"

// JSON certificates emitted by the C interface. Vertices are reported with
// the labels of the parsed input.
namespace linkless::documents {

using Json = nlohmann::ordered_json;

Json decide(const io::LabeledGraph& g, const minor::LinklessVerdict& verdict);
Json minor(const io::LabeledGraph& host, const Graph& pattern, const std::optional<minor::MinorModel>& model);
Json family();
Json web(const io::LabeledGraph& g, const kuratowski::KuratowskiWeb& w);
std::string web_dot(const io::LabeledGraph& g, const kuratowski::KuratowskiWeb& w);
Json diagram(const io::LabeledGraph& g, const diagram::Diagram& d);
Json cycles(const io::LabeledGraph& g, const std::vector<Cycle>& cycles);

// Over/under choices read from a diagram document, in crossing order of d.
// Throws ParseError for malformed JSON and InputError when the document's
// crossings are not exactly those of d.
std::vector<diagram::Over> read_assignment(const io::LabeledGraph& g, const diagram::Diagram& d, std::string_view text);
// The "order" member of a diagram document mapped to dense vertices, if any.
std::optional<std::vector<VertexId>> read_order(const io::LabeledGraph& g, std::string_view text);

}  // namespace linkless::documents
