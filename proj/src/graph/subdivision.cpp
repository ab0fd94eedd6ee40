#include "graph/subdivision.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace linkless {

namespace {

constexpr std::array<std::pair<int, int>, 10> kK5Edges{{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
}};

constexpr std::array<std::pair<int, int>, 9> kK33Edges{{
    {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
}};

}  // namespace

std::string_view to_string(KuratowskiKind kind) { return kind == KuratowskiKind::K5 ? "K5" : "K33"; }

std::span<const std::pair<int, int>> pattern_edges(KuratowskiKind kind) {
  if (kind == KuratowskiKind::K5) return kK5Edges;
  return kK33Edges;
}

std::vector<VertexId> model_vertices(const SubdivisionModel& m) {
  std::vector<VertexId> out;
  for (const Path& p : m.paths) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<SubdivisionModel> subdivision_from_edges(const Graph& host, std::span<const EdgeId> edge_ids) {
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> incident;
  std::set<EdgeId> ids;
  std::set<std::pair<VertexId, VertexId>> ends;
  for (EdgeId id : edge_ids) {
    if (!host.has_edge(id) || !ids.insert(id).second) return std::nullopt;
    const Edge& e = host.edge(id);
    if (e.is_loop() || !ends.emplace(e.u, e.v).second) return std::nullopt;
    incident[e.u].emplace_back(e.v, id);
    incident[e.v].emplace_back(e.u, id);
  }

  std::vector<VertexId> branch;
  for (const auto& [v, list] : incident) {
    if (list.size() >= 3) {
      branch.push_back(v);
    } else if (list.size() != 2) {
      return std::nullopt;
    }
  }
  KuratowskiKind kind;
  if (branch.size() == 5) {
    kind = KuratowskiKind::K5;
    for (VertexId b : branch)
      if (incident[b].size() != 4) return std::nullopt;
  } else if (branch.size() == 6) {
    kind = KuratowskiKind::K33;
    for (VertexId b : branch)
      if (incident[b].size() != 3) return std::nullopt;
  } else {
    return std::nullopt;
  }

  // Trace every branch path once.
  std::map<std::pair<VertexId, VertexId>, Path> by_ends;
  std::set<EdgeId> walked;
  auto is_branch = [&](VertexId v) { return std::binary_search(branch.begin(), branch.end(), v); };
  for (VertexId b : branch) {
    for (auto [next, first_edge] : incident[b]) {
      if (walked.contains(first_edge)) continue;
      Path path{b};
      VertexId cur = next;
      EdgeId via = first_edge;
      walked.insert(via);
      while (!is_branch(cur)) {
        path.push_back(cur);
        const auto& two = incident[cur];
        auto step = two[0].second == via ? two[1] : two[0];
        cur = step.first;
        via = step.second;
        walked.insert(via);
      }
      path.push_back(cur);
      if (cur == b) return std::nullopt;
      if (cur < b) std::reverse(path.begin(), path.end());
      auto key = std::minmax(b, cur);
      if (!by_ends.emplace(std::pair{key.first, key.second}, std::move(path)).second) return std::nullopt;
    }
  }
  if (walked.size() != ids.size()) return std::nullopt;  // stray cycle of degree-2 vertices

  SubdivisionModel m;
  m.kind = kind;
  if (kind == KuratowskiKind::K5) {
    if (by_ends.size() != 10) return std::nullopt;
    m.branch_vertices = branch;
  } else {
    if (by_ends.size() != 9) return std::nullopt;
    std::vector<VertexId> side_a{branch[0]};
    std::vector<VertexId> side_b;
    for (std::size_t i = 1; i < branch.size(); ++i) {
      auto key = std::minmax(branch[0], branch[i]);
      (by_ends.contains({key.first, key.second}) ? side_b : side_a).push_back(branch[i]);
    }
    if (side_a.size() != 3 || side_b.size() != 3) return std::nullopt;
    m.branch_vertices = side_a;
    m.branch_vertices.insert(m.branch_vertices.end(), side_b.begin(), side_b.end());
  }
  for (auto [i, j] : pattern_edges(kind)) {
    VertexId a = m.branch_vertices[static_cast<std::size_t>(i)];
    VertexId b = m.branch_vertices[static_cast<std::size_t>(j)];
    auto it = by_ends.find({std::min(a, b), std::max(a, b)});
    if (it == by_ends.end()) return std::nullopt;
    Path p = it->second;
    if (p.front() != a) std::reverse(p.begin(), p.end());
    m.paths.push_back(std::move(p));
  }
  m.edge_set.assign(ids.begin(), ids.end());
  return m;
}

bool validate_subdivision(const Graph& host, const SubdivisionModel& m) {
  const std::size_t branch_count = m.kind == KuratowskiKind::K5 ? 5 : 6;
  auto pattern = pattern_edges(m.kind);
  if (m.branch_vertices.size() != branch_count || m.paths.size() != pattern.size()) return false;

  std::set<VertexId> branch(m.branch_vertices.begin(), m.branch_vertices.end());
  if (branch.size() != branch_count) return false;
  for (VertexId b : branch)
    if (!host.has_vertex(b)) return false;

  std::set<VertexId> interior;
  std::multiset<std::pair<VertexId, VertexId>> path_edges;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    const Path& p = m.paths[k];
    if (p.size() < 2) return false;
    if (p.front() != m.branch_vertices[static_cast<std::size_t>(pattern[k].first)] ||
        p.back() != m.branch_vertices[static_cast<std::size_t>(pattern[k].second)]) {
      return false;
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (branch.contains(p[i]) || !host.has_vertex(p[i]) || !interior.insert(p[i]).second) return false;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] == p[i + 1]) return false;
      path_edges.emplace(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
    }
  }

  if (!std::is_sorted(m.edge_set.begin(), m.edge_set.end()) ||
      std::adjacent_find(m.edge_set.begin(), m.edge_set.end()) != m.edge_set.end()) {
    return false;
  }
  std::multiset<std::pair<VertexId, VertexId>> set_edges;
  for (EdgeId id : m.edge_set) {
    if (!host.has_edge(id)) return false;
    const Edge& e = host.edge(id);
    set_edges.emplace(e.u, e.v);
  }
  return set_edges == path_edges;
}

}  // namespace linkless
