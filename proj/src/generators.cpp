#include "graphgen/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "graphgen/io.hpp"

// Draw order per event, fixed for reproducibility:
//   ba:            one below(snapshot) per link, left to right
//   holme:         per follow-up link a bernoulli(p_triad), then either
//                  below(#eligible) or the plain below(snapshot)
//   gpa_avin:      unit() picks the event type; node then draws
//                  below(slots) once, edge twice, component nothing
//   gpa_contract:  unit(), node events draw below(slots + 1)
//   tgpa_pq:       unit(), node events draw below(slots + 2)
//   tgpa_schedule: unit(), node below(slots + 2), wedge one endpoint slot
//                  then one endpoint draw, component nothing
// The event-type unit() is consumed even when an empty graph forces the
// component fallback.

namespace graphgen {

const char* model_name(Model m) {
  switch (m) {
    case Model::ba: return "ba";
    case Model::holme: return "holme";
    case Model::gpa_avin: return "gpa-avin";
    case Model::gpa_contract: return "gpa-contract";
    case Model::tgpa_pq: return "tgpa-pq";
    case Model::tgpa_schedule: return "tgpa-schedule";
  }
  return "?";
}

std::optional<Model> model_from_name(std::string_view name) {
  for (Model m : {Model::ba, Model::holme, Model::gpa_avin, Model::gpa_contract,
                  Model::tgpa_pq, Model::tgpa_schedule})
    if (name == model_name(m)) return m;
  return std::nullopt;
}

GraphSpec GraphSpec::clique(uint32_t k) {
  GraphSpec s;
  s.kind = Kind::clique;
  s.clique_size = k;
  return s;
}

GraphSpec GraphSpec::file(std::string p) {
  GraphSpec s;
  s.kind = Kind::file;
  s.path = std::move(p);
  return s;
}

GraphSpec GraphSpec::parse(const std::string& token) {
  if (token == "empty") return empty();
  if (token.rfind("clique:", 0) == 0) {
    size_t idx = 0;
    unsigned long k = 0;
    try {
      k = std::stoul(token.substr(7), &idx);
    } catch (const std::exception&) {
      throw std::invalid_argument("graph spec: bad clique size in '" + token + "'");
    }
    if (idx != token.size() - 7 || k > 100000)
      throw std::invalid_argument("graph spec: bad clique size in '" + token + "'");
    return clique(static_cast<uint32_t>(k));
  }
  if (token.rfind("file:", 0) == 0) return file(token.substr(5));
  throw std::invalid_argument("graph spec: expected empty, clique:K or file:PATH, got '" +
                              token + "'");
}

std::string GraphSpec::describe() const {
  switch (kind) {
    case Kind::empty: return "empty";
    case Kind::clique: return "clique:" + std::to_string(clique_size);
    case Kind::file: return "file:" + path;
  }
  return "";
}

MultiGraph GraphSpec::build() const {
  switch (kind) {
    case Kind::empty:
      return MultiGraph();
    case Kind::clique: {
      MultiGraph g(clique_size);
      for (NodeId i = 0; i < clique_size; ++i)
        for (NodeId j = i + 1; j < clique_size; ++j) g.add_edge(i, j);
      return g;
    }
    case Kind::file:
      return load_edge_list(path);
  }
  return MultiGraph();
}

void GeneratorConfig::validate() const {
  auto prob = [](double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument(std::string("generator: ") + what + " must lie in [0,1]");
  };
  switch (model) {
    case Model::ba:
      if (m_edges < 1) throw std::invalid_argument("generator: m_edges must be positive");
      break;
    case Model::holme:
      if (m_edges < 1) throw std::invalid_argument("generator: m_edges must be positive");
      prob(p_triad, "p_triad");
      break;
    case Model::gpa_avin:
      prob(p, "p");
      prob(r, "r");
      prob(q, "q");
      if (std::abs(p + r + q - 1.0) > 1e-12)
        throw std::invalid_argument("generator: p + r + q must equal 1");
      if (target_nodes && p + 2.0 * q <= 0.0)
        throw std::invalid_argument("generator: node target unreachable with p = q = 0");
      break;
    case Model::gpa_contract:
    case Model::tgpa_pq:
      prob(p, "p");
      if (m < 1) throw std::invalid_argument("generator: m must be positive");
      break;
    case Model::tgpa_schedule:
      break;  // schedule validated at construction
  }
  if (steps != 0 && target_nodes != 0)
    throw std::invalid_argument("generator: set either steps or target_nodes, not both");
}

namespace {

struct TraceSink {
  StepTrace* trace;
  bool on() const { return trace != nullptr; }
  void push(StepRecord&& r) {
    if (trace) trace->push_back(std::move(r));
  }
};

// Aborts target_nodes runs whose vertex count stops moving. The window is
// generous enough for schedules whose node-event rate decays polynomially.
class StallGuard {
 public:
  StallGuard(NodeId live, uint32_t target)
      : last_live_(live), window_(std::max<uint64_t>(1000000, 100ull * target)) {}

  void tick(const MultiGraph& g, uint64_t t) {
    if (g.live_node_count() != last_live_) {
      last_live_ = g.live_node_count();
      last_change_ = t;
      return;
    }
    if (t - last_change_ > window_)
      throw std::runtime_error(
          "generate: node target looks unreachable, vertex count has stalled");
  }

 private:
  NodeId last_live_;
  uint64_t last_change_ = 0;
  uint64_t window_;
};

void fresh_pair(MultiGraph& g, uint64_t t, TraceSink& sink) {
  NodeId a = g.add_node();
  NodeId b = g.add_node();
  g.add_edge(a, b);
  if (sink.on()) {
    StepRecord rec;
    rec.kind = StepRecord::Kind::component;
    rec.t = t;
    rec.new_nodes = {a, b};
    rec.new_edges = {{a, b}};
    sink.push(std::move(rec));
  }
}

void fresh_wedge(MultiGraph& g, uint64_t t, TraceSink& sink) {
  NodeId a = g.add_node();  // center
  NodeId b = g.add_node();
  NodeId c = g.add_node();
  g.add_edge(a, b);
  g.add_edge(a, c);
  if (sink.on()) {
    StepRecord rec;
    rec.kind = StepRecord::Kind::component;
    rec.t = t;
    rec.new_nodes = {a, b, c};
    rec.new_edges = {{a, b}, {a, c}};
    sink.push(std::move(rec));
  }
}

void ba_step(MultiGraph& g, Rng& rng, uint32_t m_edges, uint64_t t, TraceSink& sink) {
  const uint64_t snap = g.slot_count();
  NodeId v = g.add_node();
  StepRecord rec;
  if (sink.on()) {
    rec.kind = StepRecord::Kind::node;
    rec.t = t;
    rec.new_nodes = {v};
  }
  for (uint32_t i = 0; i < m_edges; ++i) {
    NodeId u = g.endpoint(rng.below(snap));
    g.add_edge(v, u);
    if (sink.on()) rec.new_edges.emplace_back(v, u);
  }
  sink.push(std::move(rec));
}

void holme_step(MultiGraph& g, Rng& rng, const GeneratorConfig& cfg, uint64_t t,
                TraceSink& sink) {
  const uint64_t snap = g.slot_count();
  NodeId v = g.add_node();
  NodeId last_u = kInvalidNode;
  std::vector<NodeId> adj;
  StepRecord rec;
  if (sink.on()) {
    rec.kind = StepRecord::Kind::node;
    rec.t = t;
    rec.new_nodes = {v};
  }
  for (uint32_t i = 0; i < cfg.m_edges; ++i) {
    bool linked = false;
    if (i > 0 && rng.bernoulli(cfg.p_triad)) {
      // eligible follow-up targets: distinct neighbors of the last plain
      // target, minus v and anything v already reached
      std::vector<NodeId> cand;
      for (uint64_t j : g.slots(last_u)) cand.push_back(g.endpoint(j ^ 1));
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      std::erase_if(cand, [&](NodeId w) {
        return w == v || std::find(adj.begin(), adj.end(), w) != adj.end();
      });
      if (!cand.empty()) {
        NodeId u = cand[rng.below(cand.size())];
        g.add_edge(v, u);
        adj.push_back(u);
        linked = true;
        if (sink.on()) {
          rec.new_edges.emplace_back(v, u);
          rec.via_triad.push_back(1);
        }
      }
    }
    if (!linked) {
      NodeId u = g.endpoint(rng.below(snap));
      g.add_edge(v, u);
      adj.push_back(u);
      last_u = u;
      if (sink.on()) {
        rec.new_edges.emplace_back(v, u);
        rec.via_triad.push_back(0);
      }
    }
  }
  sink.push(std::move(rec));
}

void gpa_avin_step(MultiGraph& g, Rng& rng, const GeneratorConfig& cfg, uint64_t t,
                   TraceSink& sink) {
  double z = rng.unit();
  if (g.edge_count() == 0) {
    fresh_pair(g, t, sink);
    return;
  }
  if (z < cfg.p) {
    NodeId v = g.add_node();
    NodeId u = g.sample_endpoint(rng);
    g.add_edge(v, u);
    if (sink.on()) {
      StepRecord rec;
      rec.kind = StepRecord::Kind::node;
      rec.t = t;
      rec.new_nodes = {v};
      rec.new_edges = {{v, u}};
      sink.push(std::move(rec));
    }
  } else if (z < cfg.p + cfg.r) {
    NodeId u = g.sample_endpoint(rng);
    NodeId w = g.sample_endpoint(rng);
    g.add_edge(u, w);
    if (sink.on()) {
      StepRecord rec;
      rec.kind = StepRecord::Kind::edge;
      rec.t = t;
      rec.new_edges = {{u, w}};
      sink.push(std::move(rec));
    }
  } else {
    fresh_pair(g, t, sink);
  }
}

void contract_roster(MultiGraph& g, std::vector<NodeId>& roster, uint64_t t, TraceSink& sink) {
  StepRecord rec;
  if (sink.on()) {
    rec.kind = StepRecord::Kind::contraction;
    rec.t = t;
    rec.merged = roster;
  }
  NodeId target = g.contract(roster);
  roster.clear();
  if (sink.on()) {
    rec.merge_target = target;
    sink.push(std::move(rec));
  }
}

void gpa_contract_step(MultiGraph& g, Rng& rng, const GeneratorConfig& cfg, uint64_t t,
                       TraceSink& sink, std::vector<NodeId>& roster) {
  double z = rng.unit();
  if (z < cfg.p) {
    NodeId v = g.add_node();
    const uint64_t slots = g.slot_count();
    // one phantom slot lets the newcomer pick itself and start a loop
    uint64_t idx = rng.below(slots + 1);
    NodeId u = idx < slots ? g.endpoint(idx) : v;
    g.add_edge(v, u);
    if (sink.on()) {
      StepRecord rec;
      rec.kind = StepRecord::Kind::node;
      rec.t = t;
      rec.new_nodes = {v};
      rec.new_edges = {{v, u}};
      sink.push(std::move(rec));
    }
    if (cfg.m > 1) {
      roster.push_back(v);
      if (roster.size() >= cfg.m) contract_roster(g, roster, t, sink);
    }
  } else {
    fresh_pair(g, t, sink);
  }
}

void tgpa_node_event(MultiGraph& g, Rng& rng, uint64_t t, TraceSink& sink) {
  NodeId v = g.add_node();
  const uint64_t slots = g.slot_count();
  // two phantom slots stand in for the newcomer's own pair of links
  uint64_t idx = rng.below(slots + 2);
  NodeId u, w;
  if (idx < slots) {
    // coupled draw: u degree-proportionally, w across the same edge, so the
    // new vertex closes a triangle over an existing edge
    u = g.endpoint(idx);
    w = g.endpoint(idx ^ 1);
  } else {
    u = w = v;
  }
  g.add_edge(v, u);
  g.add_edge(v, w);
  if (sink.on()) {
    StepRecord rec;
    rec.kind = StepRecord::Kind::node;
    rec.t = t;
    rec.new_nodes = {v};
    rec.new_edges = {{v, u}, {v, w}};
    sink.push(std::move(rec));
  }
}

void tgpa_pq_step(MultiGraph& g, Rng& rng, const GeneratorConfig& cfg, uint64_t t,
                  TraceSink& sink, std::vector<NodeId>& roster) {
  double z = rng.unit();
  if (z < cfg.p) {
    tgpa_node_event(g, rng, t, sink);
    if (cfg.m > 1) {
      roster.push_back(g.node_count() - 1);
      if (roster.size() >= cfg.m) contract_roster(g, roster, t, sink);
    }
  } else {
    fresh_wedge(g, t, sink);
  }
}

void tgpa_schedule_step(MultiGraph& g, Rng& rng, const GeneratorConfig& cfg, uint64_t t,
                        TraceSink& sink) {
  EventMix mix = cfg.schedule.at(t);
  double z = rng.unit();
  int pick = z < mix.p ? 0 : (z < mix.p + mix.r ? 1 : 2);
  if (g.edge_count() == 0) pick = 2;  // nothing to attach to yet
  if (pick == 0) {
    tgpa_node_event(g, rng, t, sink);
  } else if (pick == 1) {
    uint64_t j = g.sample_endpoint_slot(rng);
    NodeId v1 = g.endpoint(j);
    NodeId w = g.endpoint(j ^ 1);
    NodeId v2 = g.sample_endpoint(rng);
    if (cfg.wedge_closes_triangle) {
      g.add_edge(v1, v2);
      g.add_edge(v2, w);
    } else {
      g.add_edge(v1, v2);
      g.add_edge(v1, w);
    }
    if (sink.on()) {
      StepRecord rec;
      rec.kind = StepRecord::Kind::wedge;
      rec.t = t;
      if (cfg.wedge_closes_triangle)
        rec.new_edges = {{v1, v2}, {v2, w}};
      else
        rec.new_edges = {{v1, v2}, {v1, w}};
      sink.push(std::move(rec));
    }
  } else {
    fresh_wedge(g, t, sink);
  }
}

}  // namespace

MultiGraph generate(const GeneratorConfig& cfg, Rng& rng, StepTrace* trace) {
  cfg.validate();
  MultiGraph g = cfg.init.build();
  if ((cfg.model == Model::ba || cfg.model == Model::holme) && g.edge_count() == 0)
    throw std::invalid_argument("generate: this model needs an initial edge to attach to");
  const bool needs_index = cfg.model == Model::holme || cfg.model == Model::gpa_contract ||
                           cfg.model == Model::tgpa_pq;
  if (needs_index) g.enable_slot_index();

  TraceSink sink{trace};
  std::vector<NodeId> roster;
  StallGuard guard(g.live_node_count(), cfg.target_nodes);
  uint64_t t = 0;
  while (true) {
    if (cfg.target_nodes ? g.live_node_count() >= cfg.target_nodes : t >= cfg.steps) break;
    ++t;
    switch (cfg.model) {
      case Model::ba:
        ba_step(g, rng, cfg.m_edges, t, sink);
        break;
      case Model::holme:
        holme_step(g, rng, cfg, t, sink);
        break;
      case Model::gpa_avin:
        gpa_avin_step(g, rng, cfg, t, sink);
        break;
      case Model::gpa_contract:
        gpa_contract_step(g, rng, cfg, t, sink, roster);
        break;
      case Model::tgpa_pq:
        tgpa_pq_step(g, rng, cfg, t, sink, roster);
        break;
      case Model::tgpa_schedule:
        tgpa_schedule_step(g, rng, cfg, t, sink);
        break;
    }
    if (cfg.target_nodes) guard.tick(g, t);
  }
  return g;
}

MultiGraph generate(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  return generate(cfg, rng, nullptr);
}

}  // namespace graphgen
