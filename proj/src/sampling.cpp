#include "graphgen/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphgen {

const char* sample_method_name(SampleMethod m) {
  switch (m) {
    case SampleMethod::forest_fire: return "ff";
    case SampleMethod::dfs: return "dfs";
    case SampleMethod::random_edge: return "edge";
  }
  throw std::logic_error("unknown sample method");
}

SampleMethod sample_method_from_name(const std::string& name) {
  if (name == "ff") return SampleMethod::forest_fire;
  if (name == "dfs") return SampleMethod::dfs;
  if (name == "edge") return SampleMethod::random_edge;
  throw std::invalid_argument("unknown sample method: " + name);
}

namespace {

// ceil(fraction * n), nudged so that products like 0.1 * 1000 that land a few
// ulps above an integer do not round up one extra node.
uint32_t target_nodes(double fraction, uint32_t n) {
  if (!(fraction > 0.0) || fraction > 1.0)
    throw std::invalid_argument("target_fraction must be in (0, 1]");
  double t = std::ceil(fraction * static_cast<double>(n) - 1e-9);
  auto target = static_cast<uint32_t>(t);
  return std::clamp<uint32_t>(target, 1, n);
}

uint32_t uniform_unmarked(const std::vector<uint8_t>& marked, uint32_t n, Rng& rng) {
  // Rejection sampling. The collectors never restart with zero unmarked nodes
  // left, and the expected draw count stays modest because targets cap the
  // marked share.
  for (;;) {
    auto v = static_cast<uint32_t>(rng.below(n));
    if (!marked[v]) return v;
  }
}

SampleResult finish(const SimpleGraph& g, std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  SampleResult res;
  res.graph = induced_subgraph(g, nodes);
  res.nodes = std::move(nodes);
  return res;
}

}  // namespace

SampleResult forest_fire(const SimpleGraph& g, double burn_prob,
                         double target_fraction, Rng& rng) {
  if (!(burn_prob > 0.0) || !(burn_prob < 1.0))
    throw std::invalid_argument("burn_prob must be in (0, 1)");
  const uint32_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("forest_fire: empty graph");
  const uint32_t target = target_nodes(target_fraction, n);

  std::vector<uint8_t> burned(n, 0);
  std::vector<NodeId> order;
  order.reserve(target);
  size_t head = 0;
  while (order.size() < target) {
    if (head == order.size()) {
      // The fire died out; reignite at a uniform unburned node.
      NodeId seed = uniform_unmarked(burned, n, rng);
      burned[seed] = 1;
      order.push_back(seed);
    }
    NodeId u = order[head++];
    for (NodeId v : g.neighbors_of(u)) {
      if (order.size() == target) break;
      if (!burned[v] && rng.bernoulli(burn_prob)) {
        burned[v] = 1;
        order.push_back(v);
      }
    }
  }
  return finish(g, std::move(order));
}

SampleResult dfs_sample(const SimpleGraph& g, double target_fraction, Rng& rng) {
  const uint32_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("dfs_sample: empty graph");
  const uint32_t target = target_nodes(target_fraction, n);

  std::vector<uint8_t> visited(n, 0);
  std::vector<NodeId> order;
  order.reserve(target);
  std::vector<NodeId> stack;
  std::vector<NodeId> scratch;
  while (order.size() < target) {
    if (stack.empty()) {
      stack.push_back(uniform_unmarked(visited, n, rng));
    }
    NodeId u = stack.back();
    stack.pop_back();
    if (visited[u]) continue;
    visited[u] = 1;
    order.push_back(u);
    auto nbrs = g.neighbors_of(u);
    scratch.assign(nbrs.begin(), nbrs.end());
    rng.shuffle(scratch.data(), scratch.size());
    for (NodeId v : scratch)
      if (!visited[v]) stack.push_back(v);
  }
  return finish(g, std::move(order));
}

SampleResult random_edge_sample(const SimpleGraph& g, double target_fraction,
                                Rng& rng) {
  const uint32_t n = g.node_count();
  const uint32_t target = target_nodes(target_fraction, n);
  const uint64_t m = g.edge_count();
  if (m == 0) throw std::invalid_argument("random_edge_sample: graph has no edges");

  std::vector<uint64_t> edges;
  edges.reserve(m);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : g.neighbors_of(u))
      if (u < v) edges.push_back((static_cast<uint64_t>(u) << 32) | v);

  std::vector<uint8_t> seen(n, 0);
  std::vector<NodeId> nodes;
  // Partial Fisher-Yates: position t receives a uniform pick from the edges
  // not yet drawn, so the prefix is a without-replacement sample.
  for (uint64_t t = 0; t < m && nodes.size() < target; ++t) {
    uint64_t j = t + rng.below(m - t);
    std::swap(edges[t], edges[j]);
    auto u = static_cast<NodeId>(edges[t] >> 32);
    auto v = static_cast<NodeId>(edges[t] & 0xffffffffu);
    if (!seen[u]) { seen[u] = 1; nodes.push_back(u); }
    if (!seen[v]) { seen[v] = 1; nodes.push_back(v); }
  }
  // Running out of edges is possible when isolated nodes keep the target out
  // of reach; the collected set is returned as-is.
  return finish(g, std::move(nodes));
}

SampleResult draw_sample(const SimpleGraph& g, const SampleConfig& cfg) {
  Rng rng(cfg.seed);
  switch (cfg.method) {
    case SampleMethod::forest_fire:
      return forest_fire(g, cfg.burn_prob, cfg.target_fraction, rng);
    case SampleMethod::dfs:
      return dfs_sample(g, cfg.target_fraction, rng);
    case SampleMethod::random_edge:
      return random_edge_sample(g, cfg.target_fraction, rng);
  }
  throw std::logic_error("unknown sample method");
}

}  // namespace graphgen
