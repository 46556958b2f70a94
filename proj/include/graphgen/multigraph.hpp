#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "graphgen/rng.hpp"

namespace graphgen {

using NodeId = uint32_t;

inline constexpr NodeId kInvalidNode = 0xffffffffu;

// Undirected multigraph tuned for preferential attachment. Both endpoints of
// every edge sit in one flat array, so a uniform index into that array lands
// on a vertex with probability deg(v) / 2e. Self-loops occupy two slots and
// count twice toward the degree; parallel edges are kept as-is.
//
// An optional per-node slot index supports incident-edge sampling and vertex
// contraction. Generators that never need either leave it off, which keeps
// memory at eight bytes per edge.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(NodeId n) { add_nodes(n); }

  NodeId add_node();
  void add_nodes(NodeId count);
  void add_edge(NodeId u, NodeId v);  // u == v makes a self-loop

  NodeId node_count() const { return static_cast<NodeId>(degree_.size()); }
  NodeId live_node_count() const { return live_nodes_; }
  uint64_t edge_count() const { return endpoints_.size() / 2; }
  uint64_t slot_count() const { return endpoints_.size(); }

  uint64_t degree(NodeId v) const { return degree_[v]; }
  uint64_t self_loop_count(NodeId v) const { return self_loops_[v]; }
  double self_loop_share(NodeId v) const {
    return degree_[v] ? 2.0 * double(self_loops_[v]) / double(degree_[v]) : 0.0;
  }
  bool alive(NodeId v) const { return alive_[v] != 0; }

  std::pair<NodeId, NodeId> edge(uint64_t e) const {
    return {endpoints_[2 * e], endpoints_[2 * e + 1]};
  }
  NodeId endpoint(uint64_t slot) const { return endpoints_[slot]; }

  // Degree-proportional vertex draw. The slot form exposes which slot was
  // hit; slot ^ 1 is the other end of the same edge.
  uint64_t sample_endpoint_slot(Rng& rng) const { return rng.below(endpoints_.size()); }
  NodeId sample_endpoint(Rng& rng) const { return endpoints_[sample_endpoint_slot(rng)]; }

  // Uniform over the slots of u, returns the vertex across that edge.
  // A self-loop at u can return u. Needs the slot index and deg(u) > 0.
  NodeId sample_incident_neighbor(NodeId u, Rng& rng) const;

  // Slot lists cost memory proportional to the slot array; generators opt in.
  // Enabling on an existing graph rebuilds the lists from the endpoint array.
  void enable_slot_index();
  bool slot_index_enabled() const { return slot_index_on_; }
  std::span<const uint64_t> slots(NodeId v) const;

  // Merges every vertex of `group` into the member with the smallest id and
  // returns that id. Edges inside the group become self-loops on the target;
  // merged vertices are dead afterwards. Requires the slot index.
  NodeId contract(std::span<const NodeId> group);

  // Hands the endpoint array to the caller and leaves the graph empty.
  std::vector<NodeId> take_endpoints();

  // Recomputes every derived structure from the endpoint array and throws
  // std::logic_error on any mismatch. Test support; O(slots) time.
  void check_consistency() const;

 private:
  void reserve_slots(size_t extra);

  std::vector<NodeId> endpoints_;
  std::vector<uint32_t> degree_;
  std::vector<uint32_t> self_loops_;
  std::vector<uint8_t> alive_;
  std::vector<std::vector<uint64_t>> slots_;
  NodeId live_nodes_ = 0;
  bool slot_index_on_ = false;
};

}  // namespace graphgen
