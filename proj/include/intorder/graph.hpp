#pragma once

#include <utility>
#include <vector>

#include "intorder/errors.hpp"

namespace intorder {

/// Multigraph with vertices 1..vertex_count. Parallel edges and self-loops
/// are allowed; edge i (1-based position in the list) becomes ground-set
/// element i of the cycle matroid.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const {
    if (vertex_count < 1) fail(Errc::unsupported, "graph must have at least one vertex");
    for (auto [u, v] : edges)
      if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
        fail(Errc::invalid_element, "edge endpoint out of vertex range");
  }
};

}  // namespace intorder
