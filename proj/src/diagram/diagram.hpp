#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "graph/cycles.hpp"
#include "graph/graph.hpp"

namespace linkless::diagram {

struct Mod2 {
  std::uint8_t value = 0;

  Mod2() = default;
  explicit Mod2(int v) : value(static_cast<std::uint8_t>(((v % 2) + 2) % 2)) {}

  Mod2& operator+=(Mod2 o) {
    value ^= o.value;
    return *this;
  }
  friend Mod2 operator+(Mod2 a, Mod2 b) { return a += b; }
  friend bool operator==(Mod2, Mod2) = default;
};

enum class Over { A, B };

// Two chords whose ends interleave on the circle. a precedes b in edge order.
struct Crossing {
  EdgeId a = 0;
  EdgeId b = 0;
  Over over = Over::A;

  EdgeId over_edge() const { return over == Over::A ? a : b; }
  EdgeId under_edge() const { return over == Over::A ? b : a; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Regular projection of a spatial embedding with vertices in convex position
// and straight chords; only the over/under data is free.
struct Diagram {
  Graph graph;
  std::vector<VertexId> order;  // cyclic placement
  std::vector<Crossing> crossings;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

// The edge with the lexicographically smaller (min end, max end) goes over.
struct LexicographicOver {};
// Independent fair coin per crossing from a seeded generator.
struct RandomOver {
  std::uint64_t seed = 0;
};
// Over choice per crossing, in crossing order.
struct ExplicitOver {
  std::vector<Over> choices;
};
using OverRule = std::variant<LexicographicOver, RandomOver, ExplicitOver>;

// Chords (a,b), (c,d) cross iff they share no end and exactly one of c, d
// lies strictly inside the arc from a to b.
bool chords_cross(std::span<const int> position, const Edge& e, const Edge& f);

// g must be simple (no loops, no parallel edges) and order a permutation of
// its vertices; otherwise InputError.
Diagram convex_diagram(const Graph& g, std::span<const VertexId> order, const OverRule& rule = LexicographicOver{});
Diagram convex_diagram(const Graph& g, const OverRule& rule = LexicographicOver{});

// Flips the over/under of one crossing.
Diagram crossing_change(const Diagram& d, std::size_t index);

// Crossing list is exactly the interleaving non-adjacent chord pairs.
bool validate(const Diagram& d);

// Over-crossings of c1 over c2, mod 2. Cycles must be vertex-disjoint cycles
// of d.graph.
Mod2 linking_number(const Diagram& d, const Cycle& c1, const Cycle& c2);
// All crossings between edges of c1 and edges of c2, either way over.
int inter_crossings(const Diagram& d, const Cycle& c1, const Cycle& c2);

using CyclePair = std::pair<Cycle, Cycle>;
// Every unordered pair of vertex-disjoint simple cycles; the first member of
// a pair precedes the second in enumerate_cycles order.
std::vector<CyclePair> disjoint_cycle_pairs(const Graph& g, int vertex_cap = kDefaultCycleVertexCap);

// Sum over all disjoint cycle pairs of linking_number, mod 2.
Mod2 conway_gordon_sum(const Diagram& d, int vertex_cap = kDefaultCycleVertexCap);

}  // namespace linkless::diagram
