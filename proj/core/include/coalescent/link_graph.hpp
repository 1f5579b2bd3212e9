#pragma once

#include <utility>
#include <vector>

#include "coalescent/complex.hpp"

namespace coalescent {

using GraphEdge = std::pair<VertexId, VertexId>;

/// Link of a vertex in a complex of dimension at most 2, as a simple graph.
/// Nodes and edges are sorted; every edge has first < second.
struct LinkGraph {
  std::vector<VertexId> nodes;
  std::vector<GraphEdge> edges;

  bool has_node(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const;
  std::size_t degree(VertexId v) const;
  /// True when the graph is a single simple cycle through every node.
  bool is_simple_cycle() const;

  friend bool operator==(const LinkGraph&, const LinkGraph&) = default;
};

/// Throws Error(SimplexNotInComplex) if {v} is missing and
/// Error(DimensionTooHigh) if some simplex through v has dimension above 2.
LinkGraph link_graph(const SimplicialComplex& c, VertexId v);

/// Bridges of a simple graph (edges on no cycle), found with a lowpoint
/// depth-first traversal. Deterministic: sorted output.
std::vector<GraphEdge> bridges(const LinkGraph& g);

/// Nodes incident to at least one non-bridge edge, i.e. nodes on a simple cycle.
std::vector<VertexId> nodes_on_cycles(const LinkGraph& g);

bool has_cycle(const LinkGraph& g);

}  // namespace coalescent
