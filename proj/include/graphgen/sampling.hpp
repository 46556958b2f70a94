#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphgen/rng.hpp"
#include "graphgen/simple_graph.hpp"

namespace graphgen {

enum class SampleMethod { forest_fire, dfs, random_edge };

const char* sample_method_name(SampleMethod m);
SampleMethod sample_method_from_name(const std::string& name);

struct SampleConfig {
  SampleMethod method = SampleMethod::forest_fire;
  double burn_prob = 0.7;
  double target_fraction = 1.0;
  uint64_t seed = 0;
};

// graph: the induced subgraph on the collected node set; nodes: the collected
// set as sorted original ids, so nodes[i] is the original id of sample node i.
struct SampleResult {
  SimpleGraph graph;
  std::vector<NodeId> nodes;
};

// Each collector stops at ceil(target_fraction * n) nodes (the edge sampler
// may overshoot by one, and stops early if its edges run out while isolated
// nodes keep the target out of reach).
SampleResult forest_fire(const SimpleGraph& g, double burn_prob,
                         double target_fraction, Rng& rng);
SampleResult dfs_sample(const SimpleGraph& g, double target_fraction, Rng& rng);
SampleResult random_edge_sample(const SimpleGraph& g, double target_fraction,
                                Rng& rng);

SampleResult draw_sample(const SimpleGraph& g, const SampleConfig& cfg);

}  // namespace graphgen
