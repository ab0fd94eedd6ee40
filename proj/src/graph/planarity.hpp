#pragma once

#include <optional>

#include "graph/graph.hpp"
#include "graph/subdivision.hpp"

namespace linkless {

struct PlanarityVerdict {
  bool planar = true;
  // Present iff !planar. Edge ids refer to the input graph.
  std::optional<SubdivisionModel> witness;
};

PlanarityVerdict is_planar(const Graph& g);

}  // namespace linkless
