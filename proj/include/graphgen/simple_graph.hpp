#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphgen/multigraph.hpp"

namespace graphgen {

// Loop-free deduplicated adjacency in CSR form. Rows are sorted ascending
// and every edge appears in both rows.
struct SimpleGraph {
  std::vector<uint32_t> offsets;  // node_count() + 1 entries
  std::vector<NodeId> neighbors;

  uint32_t node_count() const {
    return offsets.empty() ? 0 : static_cast<uint32_t>(offsets.size() - 1);
  }
  uint64_t edge_count() const { return neighbors.size() / 2; }
  uint32_t degree(NodeId v) const { return offsets[v + 1] - offsets[v]; }
  std::span<const NodeId> neighbors_of(NodeId v) const {
    return {neighbors.data() + offsets[v], neighbors.data() + offsets[v + 1]};
  }
  bool has_edge(NodeId u, NodeId v) const;
  std::vector<uint32_t> degrees() const;
};

// Drops self-loops, collapses parallel edges, renumbers live vertices in id
// order. The rvalue overload recycles the endpoint storage and should be
// preferred once the multigraph is no longer needed; on edge-heavy graphs it
// roughly halves the peak footprint.
SimpleGraph simplify(const MultiGraph& g);
SimpleGraph simplify(MultiGraph&& g);

// nodes must be sorted and duplicate-free; vertex i of the result is nodes[i].
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const NodeId> nodes);

}  // namespace graphgen
