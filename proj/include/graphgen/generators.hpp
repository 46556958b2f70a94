#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphgen/multigraph.hpp"
#include "graphgen/schedule.hpp"

namespace graphgen {

enum class Model {
  ba,            // uniform-endpoint attachment, fixed links per vertex
  holme,         // attachment plus triangle-closing follow-up links
  gpa_avin,      // node / edge / two-vertex-component event mixture
  gpa_contract,  // node events with a phantom self slot, periodic merges
  tgpa_pq,       // coupled two-link node events, wedge components, merges
  tgpa_schedule  // scheduled node / wedge / wedge-component mixture
};

const char* model_name(Model m);
std::optional<Model> model_from_name(std::string_view name);

struct GraphSpec {
  enum class Kind { empty, clique, file };
  Kind kind = Kind::empty;
  uint32_t clique_size = 0;
  std::string path;

  static GraphSpec empty() { return {}; }
  static GraphSpec clique(uint32_t k);
  static GraphSpec file(std::string p);
  // "empty" | "clique:K" | "file:PATH"
  static GraphSpec parse(const std::string& token);
  std::string describe() const;
  MultiGraph build() const;
};

// One generator event, captured when a trace is requested. Tests lean on
// these to cross-check mechanics without re-deriving state.
struct StepRecord {
  enum class Kind { node, edge, wedge, component, contraction };
  Kind kind{};
  uint64_t t = 0;
  std::vector<NodeId> new_nodes;
  std::vector<std::pair<NodeId, NodeId>> new_edges;
  std::vector<uint8_t> via_triad;  // parallel to new_edges; holme only
  std::vector<NodeId> merged;      // contraction only
  NodeId merge_target = kInvalidNode;
};
using StepTrace = std::vector<StepRecord>;

struct GeneratorConfig {
  Model model = Model::ba;

  // Event mixture. gpa_avin reads p/r/q; gpa_contract and tgpa_pq read p
  // as the node-event probability with 1-p going to fresh components.
  double p = 1.0;
  double r = 0.0;
  double q = 0.0;

  uint32_t m = 1;        // node events per merge (gpa_contract, tgpa_pq)
  uint32_t m_edges = 1;  // links per new vertex (ba, holme)
  double p_triad = 0.0;  // chance a follow-up link closes a triangle (holme)

  Schedule schedule = Schedule::constant(1.0, 0.0, 0.0);  // tgpa_schedule
  bool wedge_closes_triangle = false;  // tgpa_schedule wedge wiring variant

  GraphSpec init;

  // Exactly one stopping rule: steps counts events, target_nodes stops once
  // that many vertices are alive. target_nodes wins when nonzero.
  uint64_t steps = 0;
  uint32_t target_nodes = 0;

  uint64_t seed = 1;

  void validate() const;  // throws std::invalid_argument
};

MultiGraph generate(const GeneratorConfig& cfg);
MultiGraph generate(const GeneratorConfig& cfg, Rng& rng, StepTrace* trace = nullptr);

}  // namespace graphgen
