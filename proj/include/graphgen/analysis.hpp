#pragma once

#include <cstdint>
#include <vector>

#include "graphgen/simple_graph.hpp"

namespace graphgen {

// Largest algebraic adjacency eigenvalues, descending. residuals[i] is
// ||A x - lambda x|| for the unit Ritz vector x; a pair counts as converged
// when that residual is at most tolerance * max(1, max degree). Only the
// converged descending prefix is reported, so k_converged < k_requested
// signals non-convergence instead of returning unvetted values.
struct SpectrumResult {
  std::vector<double> eigenvalues;
  std::vector<double> residuals;
  uint32_t k_requested = 0;
  uint32_t k_converged = 0;
};

// Dense direct solve for small n (or k close to n), Lanczos with full
// reorthogonalization otherwise. Every reported pair is certified by an
// explicit residual check against the graph itself; degenerate eigenvalue
// copies beyond the reach of a single starting vector are recovered through
// breakdown restarts.
SpectrumResult top_eigenvalues(const SimpleGraph& g, uint32_t k,
                               double tolerance = 1e-8);

std::vector<uint32_t> degree_sequence(const SimpleGraph& g);

struct ClusteringOptions {
  bool higher_order = true;  // count 4-cliques too; skip to save time
};

// Wedge convention: wedges = sum_u d(u)(d(u)-1), so global = 6 T / wedges
// equals 1 on cliques. three_wedges = sum_u triangles(u) * (d(u)-2), and each
// 4-clique closes 12 of them. Nodes with degree < 2 (or without a triangle,
// for the higher-order local) contribute 0 to the local means, which average
// over all nodes. With higher_order off, four_cliques and both ho fields stay
// zero; three_wedges is still filled since the triangle pass pays for it.
struct ClusteringReport {
  uint64_t triangles = 0;
  uint64_t wedges = 0;
  uint64_t four_cliques = 0;
  uint64_t three_wedges = 0;
  double global = 0.0;
  double local_avg = 0.0;
  double ho_global = 0.0;
  double ho_local_avg = 0.0;
};

ClusteringReport clustering(const SimpleGraph& g,
                            const ClusteringOptions& opt = {});

}  // namespace graphgen
