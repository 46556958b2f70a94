#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "graphgen/analysis.hpp"
#include "graphgen/multigraph.hpp"
#include "graphgen/rng.hpp"
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

SimpleGraph er_graph(uint32_t n, double p, uint64_t seed) {
  MultiGraph g;
  g.add_nodes(n);
  Rng rng(seed);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return simplify(std::move(g));
}

SimpleGraph clique(uint32_t n) {
  MultiGraph g;
  g.add_nodes(n);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return simplify(std::move(g));
}

SimpleGraph star(uint32_t leaves) {
  MultiGraph g;
  g.add_nodes(leaves + 1);
  for (uint32_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return simplify(std::move(g));
}

struct BruteCliques {
  uint64_t tri = 0, k4 = 0;
  std::vector<uint64_t> tri_u, k4_u;
};

BruteCliques brute_cliques(const SimpleGraph& g) {
  const uint32_t n = g.node_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (uint32_t u = 0; u < n; ++u)
    for (NodeId v : g.neighbors_of(u)) adj[u][v] = 1;
  BruteCliques b;
  b.tri_u.assign(n, 0);
  b.k4_u.assign(n, 0);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      for (uint32_t w = v + 1; w < n; ++w)
        if (adj[u][v] && adj[u][w] && adj[v][w]) {
          ++b.tri;
          ++b.tri_u[u];
          ++b.tri_u[v];
          ++b.tri_u[w];
        }
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v)
      for (uint32_t w = v + 1; w < n; ++w)
        for (uint32_t x = w + 1; x < n; ++x)
          if (adj[u][v] && adj[u][w] && adj[u][x] && adj[v][w] && adj[v][x] &&
              adj[w][x]) {
            ++b.k4;
            ++b.k4_u[u];
            ++b.k4_u[v];
            ++b.k4_u[w];
            ++b.k4_u[x];
          }
  return b;
}

}  // namespace

TEST_SUITE_BEGIN("analysis");

TEST_CASE("degree sequence on fixed shapes") {
  auto k4 = clique(4);
  CHECK(degree_sequence(k4) == std::vector<uint32_t>{3, 3, 3, 3});
  auto s5 = star(5);
  CHECK(degree_sequence(s5) == std::vector<uint32_t>{5, 1, 1, 1, 1, 1});
}

TEST_CASE("degree sequence matches adjacency row sums") {
  for (uint64_t trial = 0; trial < 100; ++trial) {
    SimpleGraph g = er_graph(30, 0.15, 900 + trial);
    auto degs = degree_sequence(g);
    REQUIRE(degs.size() == g.node_count());
    uint64_t total = 0;
    for (uint32_t u = 0; u < g.node_count(); ++u) {
      uint32_t row = 0;
      for (uint32_t v = 0; v < g.node_count(); ++v)
        if (v != u && g.has_edge(u, v)) ++row;
      CHECK(degs[u] == row);
      total += degs[u];
    }
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("dense solve pins small spectra") {
  auto k3 = clique(3);
  auto top = top_eigenvalues(k3, 1);
  REQUIRE(top.k_converged == 1);
  CHECK(top.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-9));

  auto s9 = star(9);
  auto full = top_eigenvalues(s9, 10);
  REQUIRE(full.k_converged == 10);
  CHECK(full.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-9));
  for (int i = 1; i <= 8; ++i) CHECK(std::abs(full.eigenvalues[i]) < 1e-8);
  CHECK(full.eigenvalues[9] == doctest::Approx(-3.0).epsilon(1e-9));
}

TEST_CASE("iterative path recovers a repeated eigenvalue") {
  // star spectrum is {sqrt(d), 0 x (d-1), -sqrt(d)}; the top five need four
  // copies of zero, reachable only through breakdown restarts
  auto g = star(4999);
  auto top = top_eigenvalues(g, 5);
  REQUIRE(top.k_converged == 5);
  CHECK(top.eigenvalues[0] == doctest::Approx(std::sqrt(4999.0)).epsilon(1e-9));
  for (int i = 1; i < 5; ++i) CHECK(std::abs(top.eigenvalues[i]) < 1e-4);
  for (int i = 1; i < 5; ++i) CHECK(top.eigenvalues[i - 1] >= top.eigenvalues[i]);
}

TEST_CASE("iterative path agrees with a dense solve") {
  for (uint64_t trial = 0; trial < 50; ++trial) {
    SimpleGraph g = er_graph(200, 0.05, 7100 + trial);
    const uint32_t n = g.node_count();
    const uint32_t k = 10;
    auto top = top_eigenvalues(g, k);
    REQUIRE(top.k_converged == k);

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (uint32_t u = 0; u < n; ++u)
      for (NodeId v : g.neighbors_of(u)) a(u, v) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);

    uint32_t maxdeg = 0;
    uint64_t degsum = 0;
    for (uint32_t u = 0; u < n; ++u) {
      maxdeg = std::max(maxdeg, g.degree(u));
      degsum += g.degree(u);
    }
    for (uint32_t i = 0; i < k; ++i) {
      CHECK(std::abs(top.eigenvalues[i] - es.eigenvalues()(n - 1 - i)) < 1e-6);
      CHECK(top.residuals[i] <= 1e-8 * std::max(1.0, double(maxdeg)));
    }
    CHECK(top.eigenvalues[0] <= double(maxdeg) + 1e-9);
    CHECK(top.eigenvalues[0] + 1e-9 >= double(degsum) / n);
  }
}

TEST_CASE("spectrum corner cases") {
  auto g = er_graph(20, 0.2, 5);
  CHECK_THROWS_AS(top_eigenvalues(g, 21), std::invalid_argument);
  CHECK_THROWS_AS(top_eigenvalues(g, 5, 0.0), std::invalid_argument);

  auto none = top_eigenvalues(g, 0);
  CHECK(none.k_requested == 0);
  CHECK(none.k_converged == 0);
  CHECK(none.eigenvalues.empty());

  MultiGraph empty;
  empty.add_nodes(300);
  auto zeros = top_eigenvalues(simplify(std::move(empty)), 3);
  REQUIRE(zeros.k_converged == 3);
  for (double lam : zeros.eigenvalues) CHECK(lam == 0.0);
}

TEST_CASE("clustering on cliques is fully closed") {
  auto rep4 = clustering(clique(4));
  CHECK(rep4.triangles == 4);
  CHECK(rep4.wedges == 24);
  CHECK(rep4.four_cliques == 1);
  CHECK(rep4.three_wedges == 12);
  CHECK(rep4.global == doctest::Approx(1.0));
  CHECK(rep4.local_avg == doctest::Approx(1.0));
  CHECK(rep4.ho_global == doctest::Approx(1.0));
  CHECK(rep4.ho_local_avg == doctest::Approx(1.0));

  auto rep5 = clustering(clique(5));
  CHECK(rep5.triangles == 10);
  CHECK(rep5.four_cliques == 5);
  CHECK(rep5.global == doctest::Approx(1.0));
  CHECK(rep5.ho_global == doctest::Approx(1.0));
  CHECK(rep5.ho_local_avg == doctest::Approx(1.0));
}

TEST_CASE("open and triangle-free graphs score zero") {
  auto p3 = from_edges(3, {{0, 1}, {1, 2}});
  auto rep = clustering(p3);
  CHECK(rep.triangles == 0);
  CHECK(rep.wedges == 2);
  CHECK(rep.global == 0.0);
  CHECK(rep.local_avg == 0.0);
  CHECK(rep.ho_global == 0.0);

  auto c5 = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  auto ring = clustering(c5);
  CHECK(ring.triangles == 0);
  CHECK(ring.wedges == 10);
  CHECK(ring.global == 0.0);
}

TEST_CASE("clustering matches brute-force enumeration") {
  for (uint64_t trial = 0; trial < 100; ++trial) {
    SimpleGraph g = er_graph(40, 0.2, 40400 + trial);
    auto rep = clustering(g);
    auto brute = brute_cliques(g);

    CHECK(rep.triangles == brute.tri);
    CHECK(rep.four_cliques == brute.k4);

    const uint32_t n = g.node_count();
    uint64_t wedges = 0, w3 = 0;
    double local = 0.0, ho_local = 0.0;
    for (uint32_t u = 0; u < n; ++u) {
      const uint64_t d = g.degree(u);
      if (d < 2) continue;
      wedges += d * (d - 1);
      local += 2.0 * double(brute.tri_u[u]) / (double(d) * double(d - 1));
      w3 += brute.tri_u[u] * (d - 2);
      if (brute.tri_u[u] > 0 && d > 2)
        ho_local += 3.0 * double(brute.k4_u[u]) /
                    (double(brute.tri_u[u]) * double(d - 2));
    }
    CHECK(rep.wedges == wedges);
    CHECK(rep.three_wedges == w3);
    const double global = wedges ? 6.0 * double(brute.tri) / double(wedges) : 0.0;
    const double ho_global = w3 ? 12.0 * double(brute.k4) / double(w3) : 0.0;
    CHECK(rep.global == doctest::Approx(global).epsilon(1e-12));
    CHECK(rep.local_avg == doctest::Approx(local / n).epsilon(1e-12));
    CHECK(rep.ho_global == doctest::Approx(ho_global).epsilon(1e-12));
    CHECK(rep.ho_local_avg == doctest::Approx(ho_local / n).epsilon(1e-12));

    for (double c : {rep.global, rep.local_avg, rep.ho_global, rep.ho_local_avg}) {
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
    }
  }
}

TEST_CASE("higher-order flag skips clique counting only") {
  SimpleGraph g = er_graph(60, 0.3, 606);
  auto full = clustering(g);
  auto lean = clustering(g, ClusteringOptions{.higher_order = false});
  CHECK(lean.triangles == full.triangles);
  CHECK(lean.wedges == full.wedges);
  CHECK(lean.three_wedges == full.three_wedges);
  CHECK(lean.global == full.global);
  CHECK(lean.local_avg == full.local_avg);
  CHECK(lean.four_cliques == 0);
  CHECK(lean.ho_global == 0.0);
  CHECK(lean.ho_local_avg == 0.0);
}

TEST_SUITE_END();
