#include <doctest.h>
#include <gsl/gsl_cdf.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "graphgen/multigraph.hpp"

using graphgen::MultiGraph;
using graphgen::NodeId;
using graphgen::Rng;

namespace {

// Random multigraph with loops and parallels for fuzz cases.
MultiGraph random_multigraph(Rng& rng, NodeId n, int edges, bool with_index) {
  MultiGraph g(n);
  if (with_index) g.enable_slot_index();
  for (int i = 0; i < edges; ++i) {
    auto u = NodeId(rng.below(n));
    auto v = NodeId(rng.below(n));
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_SUITE("multigraph") {

TEST_CASE("degrees count loops twice") {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  g.add_edge(1, 2);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 4);
  CHECK(g.degree(2) == 1);
  CHECK(g.self_loop_count(1) == 1);
  CHECK(g.self_loop_share(1) == doctest::Approx(0.5));
  CHECK(g.edge_count() == 3);
  CHECK(g.slot_count() == 6);
  g.check_consistency();
}

TEST_CASE("handshake holds on fuzz graphs") {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    auto n = NodeId(2 + rng.below(30));
    int e = int(rng.below(60));
    MultiGraph g = random_multigraph(rng, n, e, trial % 2 == 0);
    uint64_t sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
    g.check_consistency();
  }
}

TEST_CASE("endpoint sampling matches degrees") {
  // Chi-square against deg/2e on a fixed sparse graph.
  Rng build(7);
  MultiGraph g = random_multigraph(build, 30, 120, false);
  Rng rng(99);
  const int draws = 200000;
  std::vector<int> hits(g.node_count(), 0);
  for (int i = 0; i < draws; ++i) ++hits[g.sample_endpoint(rng)];
  double chi2 = 0;
  int dof = -1;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) {
      CHECK(hits[v] == 0);
      continue;
    }
    double expect = double(draws) * double(g.degree(v)) / double(g.slot_count());
    chi2 += (hits[v] - expect) * (hits[v] - expect) / expect;
    ++dof;
  }
  REQUIRE(dof > 0);
  CHECK(chi2 < gsl_cdf_chisq_Qinv(0.001, dof));
}

TEST_CASE("incident neighbor draw walks the chosen edge") {
  MultiGraph g(5);
  g.enable_slot_index();
  for (NodeId leaf = 1; leaf < 5; ++leaf) g.add_edge(0, leaf);
  Rng rng(3);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 40000; ++i) ++hits[g.sample_incident_neighbor(0, rng)];
  CHECK(hits[0] == 0);
  for (NodeId leaf = 1; leaf < 5; ++leaf) {
    CHECK(hits[leaf] > 9000);
    CHECK(g.sample_incident_neighbor(leaf, rng) == 0);
  }
  // A loop contributes two slots pointing back at the vertex itself.
  g.add_edge(2, 2);
  int self = 0;
  for (int i = 0; i < 30000; ++i)
    if (g.sample_incident_neighbor(2, rng) == 2) ++self;
  // deg(2) = 3, two of three slots loop back
  CHECK(self > 17000);
  CHECK(self < 23000);
}

TEST_CASE("contract merges a triangle edge") {
  MultiGraph g(3);
  g.enable_slot_index();
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  NodeId t = g.contract(std::vector<NodeId>{0, 1});
  CHECK(t == 0);
  CHECK(g.live_node_count() == 2);
  CHECK_FALSE(g.alive(1));
  CHECK(g.degree(0) == 4);
  CHECK(g.self_loop_count(0) == 1);
  CHECK(g.degree(2) == 2);
  g.check_consistency();
}

TEST_CASE("contract keeps parallels and absorbs existing loops") {
  MultiGraph g(4);
  g.enable_slot_index();
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  g.add_edge(0, 3);
  g.add_edge(1, 3);
  NodeId t = g.contract(std::vector<NodeId>{1, 0});
  CHECK(t == 0);
  // three in-group parallels plus the old loop at 1
  CHECK(g.self_loop_count(0) == 4);
  CHECK(g.degree(0) == 10);
  CHECK(g.degree(3) == 2);
  g.check_consistency();
}

TEST_CASE("contract of a singleton is a no-op") {
  MultiGraph g(2);
  g.enable_slot_index();
  g.add_edge(0, 1);
  CHECK(g.contract(std::vector<NodeId>{1}) == 1);
  CHECK(g.live_node_count() == 2);
  CHECK(g.degree(1) == 1);
  g.check_consistency();
}

TEST_CASE("contract agrees with a relabeling oracle") {
  Rng rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    auto n = NodeId(3 + rng.below(10));
    int e = int(1 + rng.below(25));
    MultiGraph g = random_multigraph(rng, n, e, true);

    size_t gsize = 1 + rng.below(n);
    std::set<NodeId> pick;
    while (pick.size() < gsize) pick.insert(NodeId(rng.below(n)));
    std::vector<NodeId> group(pick.begin(), pick.end());
    NodeId target = group.front();

    // Oracle: remap endpoints by hand and recount.
    std::map<NodeId, int> deg, loops;
    for (uint64_t i = 0; i < g.edge_count(); ++i) {
      auto [a, b] = g.edge(i);
      NodeId ra = pick.count(a) ? target : a;
      NodeId rb = pick.count(b) ? target : b;
      ++deg[ra];
      ++deg[rb];
      if (ra == rb) ++loops[ra];
    }

    CHECK(g.contract(group) == target);
    g.check_consistency();
    for (NodeId v = 0; v < n; ++v) {
      CHECK(g.degree(v) == uint64_t(deg[v]));
      CHECK(g.self_loop_count(v) == uint64_t(loops[v]));
    }
    CHECK(g.live_node_count() == n - gsize + 1);
  }
}

TEST_CASE("slot index can be built after the fact") {
  Rng rng(8);
  MultiGraph g = random_multigraph(rng, 12, 40, false);
  CHECK_FALSE(g.slot_index_enabled());
  g.enable_slot_index();
  g.check_consistency();
  g.add_edge(0, 1);
  g.check_consistency();
  CHECK(g.slots(0).size() == g.degree(0));
}

TEST_CASE("misuse is rejected") {
  MultiGraph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 7), std::out_of_range);
  CHECK_THROWS_AS(g.contract(std::vector<NodeId>{0, 1}), std::logic_error);
  g.enable_slot_index();
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.contract(std::vector<NodeId>{}), std::invalid_argument);
  g.contract(std::vector<NodeId>{0, 1});
  CHECK_THROWS_AS(g.add_edge(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.contract(std::vector<NodeId>{1, 2}), std::invalid_argument);
  Rng rng(1);
  CHECK_THROWS_AS(g.sample_incident_neighbor(2, rng), std::invalid_argument);
}

TEST_CASE("take_endpoints empties the graph") {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto eps = g.take_endpoints();
  CHECK(eps == std::vector<NodeId>{0, 1, 1, 2});
  CHECK(g.node_count() == 0);
  CHECK(g.edge_count() == 0);
}

}  // TEST_SUITE
