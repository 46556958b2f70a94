#include "graphgen/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graphgen {

NodeId MultiGraph::add_node() {
  degree_.push_back(0);
  self_loops_.push_back(0);
  alive_.push_back(1);
  if (slot_index_on_) slots_.emplace_back();
  ++live_nodes_;
  return node_count() - 1;
}

void MultiGraph::add_nodes(NodeId count) {
  for (NodeId i = 0; i < count; ++i) add_node();
}

void MultiGraph::reserve_slots(size_t extra) {
  // Grow in 1.5x steps instead of the default doubling; edge-heavy runs put
  // the endpoint array in the gigabytes and the realloc slack matters.
  size_t need = endpoints_.size() + extra;
  if (need <= endpoints_.capacity()) return;
  size_t cap = endpoints_.capacity();
  size_t grown = cap + std::max<size_t>(cap / 2, 4096);
  endpoints_.reserve(std::max(need, grown));
}

void MultiGraph::add_edge(NodeId u, NodeId v) {
  if (u >= node_count() || v >= node_count())
    throw std::out_of_range("add_edge: vertex id out of range");
  if (!alive_[u] || !alive_[v])
    throw std::invalid_argument("add_edge: endpoint was contracted away");
  reserve_slots(2);
  const uint64_t base = endpoints_.size();
  endpoints_.push_back(u);
  endpoints_.push_back(v);
  ++degree_[u];
  ++degree_[v];
  if (u == v) ++self_loops_[u];
  if (slot_index_on_) {
    slots_[u].push_back(base);
    slots_[v].push_back(base + 1);
  }
}

NodeId MultiGraph::sample_incident_neighbor(NodeId u, Rng& rng) const {
  if (!slot_index_on_) throw std::logic_error("sample_incident_neighbor: slot index is off");
  const auto& lst = slots_[u];
  if (lst.empty()) throw std::invalid_argument("sample_incident_neighbor: isolated vertex");
  uint64_t j = lst[rng.below(lst.size())];
  return endpoints_[j ^ 1];
}

void MultiGraph::enable_slot_index() {
  if (slot_index_on_) return;
  slots_.assign(node_count(), {});
  for (uint64_t j = 0; j < endpoints_.size(); ++j) slots_[endpoints_[j]].push_back(j);
  slot_index_on_ = true;
}

std::span<const uint64_t> MultiGraph::slots(NodeId v) const {
  if (!slot_index_on_) throw std::logic_error("slots: slot index is off");
  return {slots_[v].data(), slots_[v].size()};
}

NodeId MultiGraph::contract(std::span<const NodeId> group) {
  if (!slot_index_on_) throw std::logic_error("contract: slot index is off");
  if (group.empty()) throw std::invalid_argument("contract: empty group");
  std::vector<NodeId> ids(group.begin(), group.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (NodeId v : ids) {
    if (v >= node_count()) throw std::out_of_range("contract: vertex id out of range");
    if (!alive_[v]) throw std::invalid_argument("contract: dead vertex in group");
  }
  const NodeId target = ids.front();
  for (size_t gi = 1; gi < ids.size(); ++gi) {
    const NodeId w = ids[gi];
    // Rewriting w's slots first and only then testing the opposite slot makes
    // each new self-loop on the target count exactly once: an in-group edge
    // is counted when its second endpoint is rewritten, an edge that already
    // touched the target immediately.
    for (uint64_t j : slots_[w]) {
      endpoints_[j] = target;
      if (endpoints_[j ^ 1] == target) ++self_loops_[target];
    }
    degree_[target] += degree_[w];
    degree_[w] = 0;
    self_loops_[w] = 0;
    auto& tl = slots_[target];
    tl.insert(tl.end(), slots_[w].begin(), slots_[w].end());
    std::vector<uint64_t>().swap(slots_[w]);
    alive_[w] = 0;
    --live_nodes_;
  }
  return target;
}

std::vector<NodeId> MultiGraph::take_endpoints() {
  std::vector<NodeId> out = std::move(endpoints_);
  endpoints_.clear();
  degree_.clear();
  self_loops_.clear();
  alive_.clear();
  slots_.clear();
  live_nodes_ = 0;
  slot_index_on_ = false;
  return out;
}

void MultiGraph::check_consistency() const {
  auto fail = [](const std::string& what) { throw std::logic_error("multigraph: " + what); };
  if (endpoints_.size() % 2 != 0) fail("odd endpoint count");
  const NodeId n = node_count();
  if (self_loops_.size() != n || alive_.size() != n) fail("ragged per-node arrays");
  std::vector<uint32_t> deg(n, 0), loops(n, 0);
  for (uint64_t e = 0; e < edge_count(); ++e) {
    auto [a, b] = edge(e);
    if (a >= n || b >= n) fail("endpoint out of range");
    if (!alive_[a] || !alive_[b]) fail("edge touches dead vertex");
    ++deg[a];
    ++deg[b];
    if (a == b) ++loops[a];
  }
  NodeId live = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (alive_[v]) ++live;
    if (deg[v] != degree_[v]) fail("degree mismatch at vertex " + std::to_string(v));
    if (loops[v] != self_loops_[v]) fail("self-loop mismatch at vertex " + std::to_string(v));
    if (!alive_[v] && degree_[v] != 0) fail("dead vertex keeps degree");
  }
  if (live != live_nodes_) fail("live count mismatch");
  if (slot_index_on_) {
    if (slots_.size() != n) fail("ragged slot index");
    std::vector<uint8_t> seen(endpoints_.size(), 0);
    for (NodeId v = 0; v < n; ++v) {
      for (uint64_t j : slots_[v]) {
        if (j >= endpoints_.size()) fail("slot out of range");
        if (endpoints_[j] != v) fail("slot list names wrong vertex");
        if (seen[j]) fail("slot listed twice");
        seen[j] = 1;
      }
    }
    for (uint8_t s : seen)
      if (!s) fail("slot missing from index");
  }
}

}  // namespace graphgen
