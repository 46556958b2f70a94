#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphgen/analysis.hpp"
#include "graphgen/experiments.hpp"
#include "graphgen/generators.hpp"
#include "graphgen/io.hpp"
#include "graphgen/powerlaw.hpp"
#include "graphgen/rng.hpp"
#include "graphgen/sampling.hpp"
#include "graphgen/simple_graph.hpp"

using namespace graphgen;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;

std::vector<double> load_numbers(const std::string& path) {
  std::ifstream ifs(path);
  if (!ifs) throw std::runtime_error("cannot open " + path);
  std::vector<double> xs;
  std::string line;
  while (std::getline(ifs, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double v;
    while (ss >> v) xs.push_back(v);
  }
  return xs;
}

ordered_json fit_to_json(const PowerLawFit& fit) {
  ordered_json j;
  j["alpha"] = fit.alpha;
  j["xmin"] = fit.xmin;
  j["ks"] = fit.ks;
  j["n_tail"] = fit.n_tail;
  j["p_value"] = fit.p_value ? ordered_json(*fit.p_value) : ordered_json(nullptr);
  j["discrete"] = fit.discrete;
  j["significant"] = fit.significant;
  return j;
}

void print_fit_text(const PowerLawFit& fit) {
  std::cout << "alpha       " << fit.alpha << "\n"
            << "xmin        " << fit.xmin << "\n"
            << "ks          " << fit.ks << "\n"
            << "n_tail      " << fit.n_tail << "\n";
  if (fit.p_value)
    std::cout << "p_value     " << *fit.p_value << "\n"
              << "significant " << (fit.significant ? "yes" : "no") << "\n";
  std::cout << "discrete    " << (fit.discrete ? "yes" : "no") << "\n";
}

int cmd_generate(const std::string& model_tok, const std::string& init_tok,
                 uint32_t nodes, uint64_t steps, uint64_t seed, double p,
                 double r, double q, uint32_t m, uint32_t m_edges,
                 double p_triad, const std::string& schedule_spec,
                 bool wedge_closes, bool simple, const std::string& out) {
  auto model = model_from_name(model_tok);
  if (!model) {
    std::cerr << "unknown model '" << model_tok << "'\n";
    return kExitConfig;
  }
  GeneratorConfig gen;
  gen.model = *model;
  gen.p = p;
  gen.r = r;
  gen.q = q;
  gen.m = m;
  gen.m_edges = m_edges;
  gen.p_triad = p_triad;
  if (!schedule_spec.empty()) gen.schedule = parse_schedule_spec(schedule_spec);
  gen.wedge_closes_triangle = wedge_closes;
  gen.init = GraphSpec::parse(init_tok);
  gen.target_nodes = nodes;
  gen.steps = steps;
  gen.seed = seed;
  gen.validate();
  auto g = generate(gen);
  if (simple) {
    auto s = simplify(std::move(g));
    write_edge_list(out, s);
    std::cerr << "wrote " << out << " (" << s.node_count() << " nodes, "
              << s.edge_count() << " edges)\n";
  } else {
    write_edge_list(out, g);
    std::cerr << "wrote " << out << " (" << g.live_node_count() << " nodes, "
              << g.edge_count() << " edges)\n";
  }
  return kExitOk;
}

int cmd_sample(const std::string& in, const std::string& method_tok,
               double fraction, double burn, uint64_t seed,
               const std::string& out, const std::string& nodes_out) {
  auto g = simplify(load_edge_list(in));
  SampleConfig cfg;
  cfg.method = sample_method_from_name(method_tok);
  cfg.burn_prob = burn;
  cfg.target_fraction = fraction;
  cfg.seed = seed;
  auto s = draw_sample(g, cfg);
  write_edge_list(out, s.graph);
  if (!nodes_out.empty()) {
    std::ofstream ofs(nodes_out);
    if (!ofs) throw std::runtime_error("cannot write " + nodes_out);
    for (NodeId v : s.nodes) ofs << v << "\n";
  }
  std::cerr << "sampled " << s.graph.node_count() << " of " << g.node_count()
            << " nodes (" << s.graph.edge_count() << " edges) -> " << out << "\n";
  return kExitOk;
}

int cmd_analyze(const std::string& in, bool no_higher_order, uint32_t eigs,
                const std::string& spectrum_out, bool as_json) {
  auto g = simplify(load_edge_list(in));
  ClusteringOptions opt;
  opt.higher_order = !no_higher_order;
  auto rep = clustering(g, opt);
  if (as_json) {
    ordered_json j;
    j["triangles"] = rep.triangles;
    j["wedges"] = rep.wedges;
    j["four_cliques"] = rep.four_cliques;
    j["three_wedges"] = rep.three_wedges;
    j["global"] = rep.global;
    j["local_avg"] = rep.local_avg;
    j["ho_global"] = rep.ho_global;
    j["ho_local_avg"] = rep.ho_local_avg;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "nodes         " << g.node_count() << "\n"
              << "edges         " << g.edge_count() << "\n"
              << "triangles     " << rep.triangles << "\n"
              << "wedges        " << rep.wedges << "\n"
              << "four_cliques  " << rep.four_cliques << "\n"
              << "three_wedges  " << rep.three_wedges << "\n"
              << "global        " << rep.global << "\n"
              << "local_avg     " << rep.local_avg << "\n"
              << "ho_global     " << rep.ho_global << "\n"
              << "ho_local_avg  " << rep.ho_local_avg << "\n";
  }
  if (eigs > 0) {
    auto spec = top_eigenvalues(g, std::min(eigs, g.node_count()));
    if (!spectrum_out.empty()) {
      std::ofstream ofs(spectrum_out);
      if (!ofs) throw std::runtime_error("cannot write " + spectrum_out);
      char buf[64];
      for (double lam : spec.eigenvalues) {
        std::snprintf(buf, sizeof buf, "%.10g\n", lam);
        ofs << buf;
      }
      std::cerr << "wrote " << spec.k_converged << " eigenvalues -> "
                << spectrum_out << "\n";
    } else if (!as_json) {
      std::cout << "eigenvalues  ";
      for (double lam : spec.eigenvalues) std::cout << " " << lam;
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_fit(const std::string& in, const std::string& graph_in, bool spectral,
            uint32_t eigs, bool discrete, uint32_t bootstraps, uint64_t seed,
            bool as_json) {
  PowerLawFit fit;
  if (!graph_in.empty()) {
    auto g = simplify(load_edge_list(graph_in));
    if (spectral) {
      auto spec = top_eigenvalues(g, std::min(eigs, g.node_count()));
      std::vector<double> xs;
      for (double lam : spec.eigenvalues)
        if (lam > 1e-9) xs.push_back(lam);
      fit = fit_continuous(xs);
      if (bootstraps > 0) fit = bootstrap_pvalue(fit, xs, bootstraps, seed);
    } else {
      std::vector<uint64_t> degs;
      for (uint32_t v = 0; v < g.node_count(); ++v)
        if (g.degree(v) > 0) degs.push_back(g.degree(v));
      fit = fit_discrete(degs);
      if (bootstraps > 0) fit = bootstrap_pvalue(fit, degs, bootstraps, seed);
    }
  } else {
    auto xs = load_numbers(in);
    if (discrete) {
      std::vector<uint64_t> ix;
      ix.reserve(xs.size());
      for (double v : xs) ix.push_back(uint64_t(v));
      fit = fit_discrete(ix);
      if (bootstraps > 0) fit = bootstrap_pvalue(fit, ix, bootstraps, seed);
    } else {
      fit = fit_continuous(xs);
      if (bootstraps > 0) fit = bootstrap_pvalue(fit, xs, bootstraps, seed);
    }
  }
  if (as_json)
    std::cout << fit_to_json(fit).dump(2) << "\n";
  else
    print_fit_text(fit);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"preferential-attachment graph models, sampling, and power-law analysis"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "grow a graph and write its edge list");
  std::string g_model, g_init = "empty", g_schedule, g_out;
  uint32_t g_nodes = 0, g_m = 1, g_m_edges = 1;
  uint64_t g_steps = 0, g_seed = 1;
  double g_p = 1.0, g_r = 0.0, g_q = 0.0, g_triad = 0.0;
  bool g_wedge = false, g_simple = false;
  gen->add_option("--model", g_model,
                  "ba | holme | gpa-avin | gpa-contract | tgpa-pq | tgpa-schedule")
      ->required();
  gen->add_option("--init", g_init, "empty | clique:K | file:PATH");
  gen->add_option("--nodes", g_nodes, "stop once this many vertices are alive");
  gen->add_option("--steps", g_steps, "stop after this many events");
  gen->add_option("--seed", g_seed, "generator seed");
  gen->add_option("--p", g_p, "node-event probability");
  gen->add_option("--r", g_r, "wedge-event probability (gpa-avin)");
  gen->add_option("--q", g_q, "component-event probability (gpa-avin)");
  gen->add_option("--m", g_m, "node events per merge (gpa-contract, tgpa-pq)");
  gen->add_option("--m-edges", g_m_edges, "links per new vertex (ba, holme)");
  gen->add_option("--p-triad", g_triad, "triangle-closing chance (holme)");
  gen->add_option("--schedule", g_schedule,
                  "tgpa-schedule mix: target:X or const:P,R,Q");
  gen->add_flag("--wedge-closes-triangle", g_wedge,
                "wedge events close a triangle instead of a path");
  gen->add_flag("--simple", g_simple, "deduplicate and drop self-loops first");
  gen->add_option("--out", g_out, "edge-list path")->required();

  // sample
  auto* smp = app.add_subcommand("sample", "cut a subgraph out of an edge list");
  std::string s_in, s_method = "ff", s_out, s_nodes_out;
  double s_fraction = 0.3, s_burn = 0.7;
  uint64_t s_seed = 1;
  smp->add_option("--in", s_in, "input edge list")->required();
  smp->add_option("--method", s_method, "ff | dfs | edge");
  smp->add_option("--fraction", s_fraction, "target node fraction in (0, 1]");
  smp->add_option("--burn", s_burn, "forest-fire burn probability");
  smp->add_option("--seed", s_seed, "sampler seed");
  smp->add_option("--out", s_out, "sample edge-list path")->required();
  smp->add_option("--nodes-out", s_nodes_out, "also write the original node ids");

  // analyze
  auto* ana = app.add_subcommand("analyze", "clustering report and spectrum");
  std::string a_in, a_spectrum_out;
  uint32_t a_eigs = 0;
  bool a_no_ho = false, a_json = false;
  ana->add_option("--in", a_in, "input edge list")->required();
  ana->add_option("--eigs", a_eigs, "also compute this many top eigenvalues");
  ana->add_option("--spectrum-out", a_spectrum_out,
                  "write eigenvalues here, one per line");
  ana->add_flag("--no-higher-order", a_no_ho, "skip the 4-clique pass");
  ana->add_flag("--json", a_json, "print the report as JSON");

  // fit
  auto* fit = app.add_subcommand("fit", "power-law tail fit with optional bootstrap");
  std::string f_in, f_graph;
  bool f_spectral = false, f_discrete = false, f_json = false;
  uint32_t f_eigs = 100, f_boot = 0;
  uint64_t f_seed = 1;
  auto* f_in_opt = fit->add_option("--in", f_in, "numbers file, one value per line");
  auto* f_graph_opt =
      fit->add_option("--graph", f_graph, "edge list; fit its degree sequence");
  f_in_opt->excludes(f_graph_opt);
  fit->add_flag("--spectral", f_spectral,
                "with --graph: fit the top eigenvalues instead of degrees");
  fit->add_option("--eigs", f_eigs, "eigenvalue count for --spectral");
  fit->add_flag("--discrete", f_discrete, "with --in: treat values as integers");
  fit->add_option("--bootstraps", f_boot, "bootstrap replicates (0 = skip)");
  fit->add_option("--seed", f_seed, "bootstrap seed");
  fit->add_flag("--json", f_json, "print the fit as JSON");

  // oracle
  auto* orc = app.add_subcommand("oracle", "degree-recursion vs closed-form table");
  std::string o_schedule = "target:2", o_out;
  uint64_t o_tmax = 1000000;
  uint32_t o_kmax = 16;
  orc->add_option("--schedule", o_schedule, "target:X or const:P,R,Q");
  orc->add_option("--tmax", o_tmax, "recursion steps");
  orc->add_option("--kmax", o_kmax, "largest tracked degree");
  orc->add_option("--out", o_out, "also write oracle_check.csv under this directory");

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a config-driven experiment");
  std::string e_config, e_out;
  std::optional<uint64_t> e_seed;
  bool e_svg = false;
  exp->add_option("--config", e_config, "experiment config file")->required();
  exp->add_option("--seed", e_seed, "override the master seed");
  exp->add_option("--out", e_out, "override the output directory");
  exp->add_flag("--svg", e_svg, "also render SVG summaries");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_generate(g_model, g_init, g_nodes, g_steps, g_seed, g_p, g_r,
                          g_q, g_m, g_m_edges, g_triad, g_schedule, g_wedge,
                          g_simple, g_out);
    if (smp->parsed())
      return cmd_sample(s_in, s_method, s_fraction, s_burn, s_seed, s_out,
                        s_nodes_out);
    if (ana->parsed())
      return cmd_analyze(a_in, a_no_ho, a_eigs, a_spectrum_out, a_json);
    if (fit->parsed()) {
      if (f_in.empty() && f_graph.empty()) {
        std::cerr << "fit needs --in or --graph\n";
        return kExitConfig;
      }
      return cmd_fit(f_in, f_graph, f_spectral, f_eigs, f_discrete, f_boot,
                     f_seed, f_json);
    }
    if (orc->parsed()) {
      ExperimentConfig cfg;
      cfg.experiment = "oracle_check";
      cfg.schedule = o_schedule;
      cfg.tmax = o_tmax;
      cfg.kmax = o_kmax;
      cfg.validate();
      auto rows = run_oracle_check(cfg);
      std::cout << render_oracle_csv(cfg, rows);
      if (!o_out.empty()) {
        cfg.out_dir = o_out;
        write_oracle_outputs(cfg, rows);
      }
      return kExitOk;
    }
    // experiment
    auto cfg = ExperimentConfig::parse_file(e_config);
    if (e_seed) cfg.master_seed = *e_seed;
    if (!e_out.empty()) cfg.out_dir = e_out;
    if (e_svg) cfg.svg = true;
    return run_experiment(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
