#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "graphgen/generators.hpp"
#include "graphgen/multigraph.hpp"
#include "graphgen/rng.hpp"
#include "graphgen/sampling.hpp"
#include "graphgen/simple_graph.hpp"

using namespace graphgen;

namespace {

SimpleGraph from_edges(uint32_t n,
                       std::initializer_list<std::pair<uint32_t, uint32_t>> edges) {
  MultiGraph g;
  g.add_nodes(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return simplify(std::move(g));
}

SimpleGraph path_graph(uint32_t n) {
  MultiGraph g;
  g.add_nodes(n);
  for (uint32_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return simplify(std::move(g));
}

SimpleGraph er_graph(uint32_t n, double p, uint64_t seed) {
  MultiGraph g;
  g.add_nodes(n);
  Rng rng(seed);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return simplify(std::move(g));
}

// Ring plus random chords: connected, minimum degree 2, no isolated nodes.
SimpleGraph ring_with_chords(uint32_t n, uint32_t chords, uint64_t seed) {
  MultiGraph g;
  g.add_nodes(n);
  for (uint32_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  Rng rng(seed);
  for (uint32_t c = 0; c < chords; ++c) {
    auto u = static_cast<NodeId>(rng.below(n));
    auto v = static_cast<NodeId>(rng.below(n));
    if (u != v) g.add_edge(u, v);
  }
  return simplify(std::move(g));
}

bool is_connected(const SimpleGraph& g) {
  const uint32_t n = g.node_count();
  if (n == 0) return true;
  std::vector<uint8_t> seen(n, 0);
  std::vector<NodeId> queue{0};
  seen[0] = 1;
  size_t head = 0;
  while (head < queue.size()) {
    NodeId u = queue[head++];
    for (NodeId v : g.neighbors_of(u))
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
  }
  return queue.size() == n;
}

// Checks the defining property directly: the node list is a sorted subset of
// the host's vertices and the sample has an edge exactly where the host does.
void check_induced(const SimpleGraph& g, const SampleResult& s) {
  const auto& nodes = s.nodes;
  REQUIRE(s.graph.node_count() == nodes.size());
  REQUIRE(std::is_sorted(nodes.begin(), nodes.end()));
  REQUIRE(std::adjacent_find(nodes.begin(), nodes.end()) == nodes.end());
  if (!nodes.empty()) REQUIRE(nodes.back() < g.node_count());
  for (uint32_t i = 0; i < nodes.size(); ++i)
    for (uint32_t j = i + 1; j < nodes.size(); ++j)
      REQUIRE(s.graph.has_edge(i, j) == g.has_edge(nodes[i], nodes[j]));
}

}  // namespace

TEST_SUITE("sampling") {

TEST_CASE("method names round-trip") {
  for (auto m : {SampleMethod::forest_fire, SampleMethod::dfs, SampleMethod::random_edge})
    CHECK(sample_method_from_name(sample_method_name(m)) == m);
  CHECK_THROWS_AS(sample_method_from_name("bfs"), std::invalid_argument);
}

TEST_CASE("fraction one returns the whole graph") {
  auto g = ring_with_chords(80, 30, 11);
  std::vector<NodeId> all(g.node_count());
  std::iota(all.begin(), all.end(), 0);
  for (auto m : {SampleMethod::forest_fire, SampleMethod::dfs, SampleMethod::random_edge}) {
    SampleConfig cfg;
    cfg.method = m;
    cfg.target_fraction = 1.0;
    cfg.seed = 5 + static_cast<uint64_t>(m);
    auto s = draw_sample(g, cfg);
    CHECK(s.nodes == all);
    CHECK(s.graph.offsets == g.offsets);
    CHECK(s.graph.neighbors == g.neighbors);
  }
}

TEST_CASE("forest fire hits the node target exactly") {
  GeneratorConfig cfg;
  cfg.model = Model::tgpa_pq;
  cfg.p = 0.9;
  cfg.m = 2;
  cfg.init = GraphSpec::clique(3);
  cfg.target_nodes = 1000;
  cfg.seed = 77;
  auto g = simplify(generate(cfg));
  const uint32_t n = g.node_count();
  const uint32_t expected = (3 * n + 9) / 10;  // ceil(0.3 n) in integers
  Rng rng(402);
  for (int run = 0; run < 100; ++run) {
    auto s = forest_fire(g, 0.7, 0.3, rng);
    CHECK(s.nodes.size() == expected);
    CHECK(s.graph.node_count() == expected);
  }
}

TEST_CASE("near-certain burn spreads as one connected wave") {
  auto g = ring_with_chords(100, 0, 1);  // plain cycle
  Rng rng(9001);
  for (int run = 0; run < 20; ++run) {
    auto s = forest_fire(g, 1.0 - 1e-9, 0.4, rng);
    CHECK(s.nodes.size() == 40);
    CHECK(is_connected(s.graph));
  }
}

TEST_CASE("integer-valued targets do not pick up a stray extra node") {
  // 0.1 * 1000 lands a hair above 100 in floating point; the samplers must
  // still stop at 100 nodes.
  auto g = ring_with_chords(1000, 0, 2);
  Rng rng(31);
  CHECK(forest_fire(g, 0.7, 0.1, rng).nodes.size() == 100);
  CHECK(dfs_sample(g, 0.1, rng).nodes.size() == 100);
  auto s = random_edge_sample(g, 0.1, rng);
  CHECK(s.nodes.size() >= 100);
  CHECK(s.nodes.size() <= 101);
}

TEST_CASE("dfs on a path keeps the visited stretch contiguous") {
  auto g = path_graph(100);
  Rng rng(1234);
  for (int run = 0; run < 50; ++run) {
    auto s = dfs_sample(g, 0.5, rng);
    REQUIRE(s.nodes.size() == 50);
    // A depth-first walk of a path exhausts one arm before backtracking to
    // the other, so every prefix is an interval of original ids.
    CHECK(s.nodes.back() - s.nodes.front() + 1 == s.nodes.size());
    CHECK(is_connected(s.graph));
    CHECK(s.graph.edge_count() == s.nodes.size() - 1);
  }
}

TEST_CASE("dfs visits exactly the requested number") {
  Rng rng(555);
  auto g = er_graph(97, 0.08, 19);
  CHECK(dfs_sample(g, 0.25, rng).nodes.size() == 25);  // ceil(24.25)
  CHECK(dfs_sample(g, 1.0, rng).nodes.size() == 97);
  CHECK(dfs_sample(g, 0.01, rng).nodes.size() == 1);
  auto h = er_graph(64, 0.0, 3);  // no edges: restarts collect singletons
  auto s = dfs_sample(h, 0.5, rng);
  CHECK(s.nodes.size() == 32);
  CHECK(s.graph.edge_count() == 0);
}

TEST_CASE("every sample is an induced subgraph of the host") {
  Rng rng(86);
  const double fractions[] = {0.15, 0.3, 0.5, 0.8, 1.0};
  for (int i = 0; i < 100; ++i) {
    auto g = er_graph(40, 0.15, 3000 + i);
    double f = fractions[i % 5];
    SampleResult s;
    switch (i % 3) {
      case 0: s = forest_fire(g, 0.6, f, rng); break;
      case 1: s = dfs_sample(g, f, rng); break;
      default:
        if (g.edge_count() == 0) continue;
        s = random_edge_sample(g, f, rng);
    }
    check_induced(g, s);
  }
}

TEST_CASE("edge sampling covers a lone edge") {
  auto g = from_edges(5, {{1, 3}});
  Rng rng(7);
  auto s = random_edge_sample(g, 0.2, rng);
  CHECK(s.nodes == std::vector<NodeId>{1, 3});
  CHECK(s.graph.edge_count() == 1);
  // Isolated nodes make the full-graph target unreachable; the sampler
  // returns everything its edges could touch instead of spinning.
  auto t = random_edge_sample(g, 1.0, rng);
  CHECK(t.nodes == std::vector<NodeId>{1, 3});
}

TEST_CASE("edge sampling stops within one draw of the target") {
  auto g = ring_with_chords(60, 20, 13);
  const auto n = static_cast<double>(g.node_count());
  Rng rng(99);
  for (int run = 0; run < 1000; ++run) {
    double f = 0.05 + 0.9 * rng.unit();
    auto target = static_cast<size_t>(std::ceil(f * n));
    auto s = random_edge_sample(g, f, rng);
    CHECK(s.nodes.size() >= target);
    CHECK(s.nodes.size() <= target + 1);
  }
}

TEST_CASE("seeds pin down the sample") {
  auto g = er_graph(120, 0.06, 88);
  for (auto m : {SampleMethod::forest_fire, SampleMethod::dfs, SampleMethod::random_edge}) {
    SampleConfig cfg;
    cfg.method = m;
    cfg.target_fraction = 0.4;
    cfg.seed = 4242;
    auto a = draw_sample(g, cfg);
    auto b = draw_sample(g, cfg);
    CHECK(a.nodes == b.nodes);
    CHECK(a.graph.offsets == b.graph.offsets);
    CHECK(a.graph.neighbors == b.graph.neighbors);

    std::set<std::vector<NodeId>> distinct;
    for (uint64_t seed = 1; seed <= 8; ++seed) {
      cfg.seed = seed;
      distinct.insert(draw_sample(g, cfg).nodes);
    }
    CHECK(distinct.size() > 1);
  }
}

TEST_CASE("bad parameters are rejected") {
  auto g = path_graph(10);
  Rng rng(1);
  CHECK_THROWS_AS(forest_fire(g, 0.0, 0.5, rng), std::invalid_argument);
  CHECK_THROWS_AS(forest_fire(g, 1.0, 0.5, rng), std::invalid_argument);
  CHECK_THROWS_AS(forest_fire(g, 0.7, 0.0, rng), std::invalid_argument);
  CHECK_THROWS_AS(forest_fire(g, 0.7, 1.0001, rng), std::invalid_argument);
  CHECK_THROWS_AS(dfs_sample(g, -0.1, rng), std::invalid_argument);
  CHECK_THROWS_AS(random_edge_sample(g, 2.0, rng), std::invalid_argument);

  SimpleGraph empty;
  CHECK_THROWS_AS(forest_fire(empty, 0.7, 0.5, rng), std::invalid_argument);
  CHECK_THROWS_AS(dfs_sample(empty, 0.5, rng), std::invalid_argument);
  auto edgeless = er_graph(6, 0.0, 5);
  CHECK_THROWS_AS(random_edge_sample(edgeless, 0.5, rng), std::invalid_argument);
}

}  // TEST_SUITE
