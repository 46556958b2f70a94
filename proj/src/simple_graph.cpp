#include "graphgen/simple_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphgen {

bool SimpleGraph::has_edge(NodeId u, NodeId v) const {
  auto row = neighbors_of(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<uint32_t> SimpleGraph::degrees() const {
  std::vector<uint32_t> d(node_count());
  for (uint32_t v = 0; v < node_count(); ++v) d[v] = degree(v);
  return d;
}

SimpleGraph simplify(MultiGraph&& g) {
  const NodeId n_all = g.node_count();
  const NodeId n = g.live_node_count();
  std::vector<NodeId> remap;
  if (n != n_all) {
    remap.resize(n_all, kInvalidNode);
    NodeId next = 0;
    for (NodeId v = 0; v < n_all; ++v)
      if (g.alive(v)) remap[v] = next++;
  }
  std::vector<NodeId> raw = g.take_endpoints();

  // One normalized 64-bit key per non-loop edge; sorting by (lo, hi) both
  // deduplicates and emits every CSR row already in ascending order.
  std::vector<uint64_t> pairs;
  pairs.reserve(raw.size() / 2);
  for (size_t i = 0; i + 1 < raw.size(); i += 2) {
    NodeId a = raw[i], b = raw[i + 1];
    if (a == b) continue;
    if (!remap.empty()) {
      a = remap[a];
      b = remap[b];
    }
    if (a > b) std::swap(a, b);
    pairs.push_back((static_cast<uint64_t>(a) << 32) | b);
  }
  std::vector<NodeId>().swap(raw);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  SimpleGraph s;
  s.offsets.assign(size_t(n) + 1, 0);
  for (uint64_t pk : pairs) {
    ++s.offsets[(pk >> 32) + 1];
    ++s.offsets[(pk & 0xffffffffu) + 1];
  }
  for (size_t v = 1; v < s.offsets.size(); ++v) s.offsets[v] += s.offsets[v - 1];
  std::vector<uint32_t> cursor(s.offsets.begin(), s.offsets.end() - 1);
  s.neighbors.resize(2 * pairs.size());
  for (uint64_t pk : pairs) {
    auto a = static_cast<NodeId>(pk >> 32);
    auto b = static_cast<NodeId>(pk & 0xffffffffu);
    s.neighbors[cursor[a]++] = b;
    s.neighbors[cursor[b]++] = a;
  }
  return s;
}

SimpleGraph simplify(const MultiGraph& g) {
  MultiGraph copy = g;
  return simplify(std::move(copy));
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const NodeId> nodes) {
  for (size_t i = 0; i + 1 < nodes.size(); ++i)
    if (nodes[i] >= nodes[i + 1])
      throw std::invalid_argument("induced_subgraph: nodes must be sorted and unique");
  if (!nodes.empty() && nodes.back() >= g.node_count())
    throw std::out_of_range("induced_subgraph: vertex id out of range");

  auto rank_of = [&](NodeId v) -> NodeId {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
    if (it == nodes.end() || *it != v) return kInvalidNode;
    return static_cast<NodeId>(it - nodes.begin());
  };

  SimpleGraph s;
  s.offsets.assign(nodes.size() + 1, 0);
  for (size_t i = 0; i < nodes.size(); ++i) {
    uint32_t deg = 0;
    for (NodeId w : g.neighbors_of(nodes[i]))
      if (rank_of(w) != kInvalidNode) ++deg;
    s.offsets[i + 1] = s.offsets[i] + deg;
  }
  s.neighbors.resize(s.offsets.back());
  for (size_t i = 0; i < nodes.size(); ++i) {
    uint32_t at = s.offsets[i];
    for (NodeId w : g.neighbors_of(nodes[i])) {
      NodeId r = rank_of(w);
      if (r != kInvalidNode) s.neighbors[at++] = r;
    }
  }
  return s;
}

}  // namespace graphgen
