#include "graph/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace linkless::io {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Graph6 parser over text[begin, end), reporting offsets relative to `base`.
Graph parse_graph6_span(std::string_view text, std::size_t base) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6: unexpected end of data", base + i);
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range 63..126", base + i);
    return c - 63;
  };

  std::int64_t n = 0;
  int first = byte_at(pos);
  if (first < 63) {
    n = first;
    pos += 1;
  } else if (byte_at(pos + 1) < 63) {
    for (int k = 1; k <= 3; ++k) n = (n << 6) | byte_at(pos + static_cast<std::size_t>(k));
    pos += 4;
  } else {
    for (int k = 2; k <= 7; ++k) n = (n << 6) | byte_at(pos + static_cast<std::size_t>(k));
    pos += 8;
  }
  if (n > (1 << 20)) throw ParseError("graph6: vertex count too large", base);

  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < need) throw ParseError("graph6: truncated adjacency data", base + text.size());
  if (text.size() - pos > need) throw ParseError("graph6: trailing bytes after adjacency data", base + pos + need);

  Graph g(static_cast<int>(n));
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int chunk = byte_at(pos + static_cast<std::size_t>(k / 6));
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    int last = byte_at(pos + need - 1);
    int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", base + pos + need - 1);
  }
  return g;
}

}  // namespace

LabeledGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::int64_t> values;
    std::size_t i = 0;
    while (i < line.size()) {
      if (is_space(line[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !is_space(line[j])) ++j;
      std::int64_t value = 0;
      auto token = line.substr(i, j - i);
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
        throw ParseError("edge list: expected a non-negative integer, got '" + std::string(token) + "'",
                         line_start + i);
      }
      if (values.size() == 2) throw ParseError("edge list: more than two vertices on a line", line_start + i);
      values.push_back(value);
      i = j;
    }
    if (values.size() == 1) throw ParseError("edge list: line has a single vertex", line_start);
    if (values.size() == 2) raw.emplace_back(values[0], values[1]);
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }

  std::map<std::int64_t, int> dense;
  for (auto [a, b] : raw) {
    dense.emplace(a, 0);
    dense.emplace(b, 0);
  }
  LabeledGraph out;
  int next = 0;
  for (auto& [label, index] : dense) {
    index = next++;
    out.labels.push_back(label);
  }
  out.graph = Graph(next);
  for (auto [a, b] : raw) out.graph.add_edge(dense.at(a), dense.at(b));
  return out;
}

Graph parse_graph6(std::string_view text) {
  auto graphs = parse_graph6_lines(text);
  if (graphs.size() != 1) {
    throw ParseError("graph6: expected exactly one graph, found " + std::to_string(graphs.size()), 0);
  }
  return std::move(graphs.front());
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(parse_graph6_span(line, start));
    start = end + 1;
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  if (!g.is_simple()) throw InputError("graph6 encodes simple graphs only");
  const std::int64_t n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (const Edge& e : g.edges()) {
    auto a = static_cast<std::size_t>(g.vertex_index(e.u));
    auto b = static_cast<std::size_t>(g.vertex_index(e.v));
    adj[a][b] = adj[b][a] = true;
  }
  int acc = 0;
  int used = 0;
  for (std::size_t j = 1; j < static_cast<std::size_t>(n); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (adj[i][j] ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Format detect_format(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (is_space(line.back()))) line.remove_suffix(1);
    while (!line.empty() && (is_space(line.front()))) line.remove_prefix(1);
    if (!line.empty()) {
      bool has_space = std::any_of(line.begin(), line.end(), is_space);
      return has_space ? Format::EdgeList : Format::Graph6;
    }
    start = end + 1;
  }
  return Format::EdgeList;
}

LabeledGraph parse(std::string_view text, Format format) {
  if (format == Format::Auto) format = detect_format(text);
  if (format == Format::EdgeList) return parse_edge_list(text);
  LabeledGraph out;
  out.graph = parse_graph6(text);
  for (int i = 0; i < out.graph.vertex_count(); ++i) out.labels.push_back(i);
  return out;
}

}  // namespace linkless::io
