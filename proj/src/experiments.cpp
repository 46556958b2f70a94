#include "graphgen/experiments.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "graphgen/analysis.hpp"
#include "graphgen/generators.hpp"
#include "graphgen/io.hpp"
#include "graphgen/powerlaw.hpp"
#include "graphgen/theory.hpp"

namespace graphgen {

namespace {

std::string g10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Plain decimal, or A/B for exact thirds and the like.
double parse_double_tok(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos)
    return parse_double_tok(s.substr(0, slash)) /
           parse_double_tok(s.substr(slash + 1));
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("bad number: '" + s + "'");
  return v;
}

uint64_t parse_u64_tok(const std::string& s) {
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("bad integer: '" + s + "'");
  return v;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_double_tok(tok));
  return out;
}

template <typename... Vs>
uint64_t chain(std::string_view tag, Vs... vs) {
  uint64_t h = Rng::hash_str(tag);
  ((h = Rng::hash_combine(h, static_cast<uint64_t>(vs))), ...);
  return h;
}

uint64_t dbits(double v) { return std::bit_cast<uint64_t>(v); }

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::pair<double, double> mean_sd(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= double(xs.size());
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / double(xs.size() - 1))};
}

void write_metadata(std::ostream& os, const ExperimentConfig& cfg) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(cfg.config_hash()));
  FitOptions fit;
  os << "# graphgen " << kVersion << "\n"
     << "# experiment=" << cfg.experiment << "\n"
     << "# config_hash=" << hash << "\n"
     << "# defaults: burn_prob=" << g10(cfg.burn) << " n_boot=" << cfg.bootstraps
     << " significance_threshold=" << g10(fit.significance_threshold)
     << " eig_k=" << cfg.eigs << "\n";
}

std::ofstream open_out(const std::string& path) {
  std::ofstream ofs(path, std::ios::binary);
  if (!ofs) throw std::runtime_error("cannot write " + path);
  return ofs;
}

// Degree-tail fit of a graph: zero-degree vertices carry no tail information
// and are dropped before the discrete fit. A graph too degenerate to fit
// comes back as an insignificant sentinel instead of an exception so one bad
// cell cannot sink a whole run.
PowerLawFit fit_degree_tail(const SimpleGraph& g, uint32_t n_boot, uint64_t seed,
                            const FitOptions& opt) {
  std::vector<uint64_t> degs;
  degs.reserve(g.node_count());
  for (uint32_t v = 0; v < g.node_count(); ++v)
    if (uint32_t d = g.degree(v); d > 0) degs.push_back(d);
  try {
    auto fit = fit_discrete(degs, opt);
    if (n_boot > 0) fit = bootstrap_pvalue(fit, degs, n_boot, seed, opt);
    return fit;
  } catch (const std::invalid_argument&) {
    PowerLawFit bad;
    bad.alpha = std::numeric_limits<double>::quiet_NaN();
    bad.p_value = 0.0;
    bad.discrete = true;
    return bad;
  }
}

PowerLawFit fit_spectral_tail(const SimpleGraph& g, uint32_t k, uint32_t n_boot,
                              uint64_t seed, const FitOptions& opt) {
  std::vector<double> eigs;
  try {
    auto spec = top_eigenvalues(g, std::min(k, g.node_count()));
    for (double lam : spec.eigenvalues)
      if (lam > 1e-9) eigs.push_back(lam);
    auto fit = fit_continuous(eigs, opt);
    if (n_boot > 0) fit = bootstrap_pvalue(fit, eigs, n_boot, seed, opt);
    return fit;
  } catch (const std::invalid_argument&) {
    PowerLawFit bad;
    bad.alpha = std::numeric_limits<double>::quiet_NaN();
    bad.p_value = 0.0;
    return bad;
  }
}

}  // namespace

ExperimentConfig ExperimentConfig::parse(std::istream& in, const std::string& name) {
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument(name + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') continue;  // cosmetic
    auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    try {
      if (key == "experiment") cfg.experiment = val;
      else if (key == "seed") cfg.master_seed = parse_u64_tok(val);
      else if (key == "out") cfg.out_dir = val;
      else if (key == "nodes") cfg.nodes = uint32_t(parse_u64_tok(val));
      else if (key == "graphs") cfg.graphs = uint32_t(parse_u64_tok(val));
      else if (key == "reps") cfg.reps = uint32_t(parse_u64_tok(val));
      else if (key == "bootstraps") cfg.bootstraps = uint32_t(parse_u64_tok(val));
      else if (key == "betas") cfg.betas = parse_double_list(val);
      else if (key == "fractions") cfg.fractions = parse_double_list(val);
      else if (key == "burn") cfg.burn = parse_double_tok(val);
      else if (key == "eigs") cfg.eigs = uint32_t(parse_u64_tok(val));
      else if (key == "svg") cfg.svg = (val == "1" || val == "true" || val == "yes");
      else if (key == "methods") {
        cfg.methods.clear();
        for (const auto& tok : split(val, ','))
          cfg.methods.push_back(sample_method_from_name(tok));
      } else if (key == "rows") {
        cfg.rows = split(val, ';');
      } else if (key == "targets") {
        cfg.targets = parse_double_list(val);
      } else if (key == "gpa_p") {
        cfg.gpa_p = parse_double_list(val);
      } else if (key == "tgpa") {
        cfg.tgpa.clear();
        for (const auto& tok : split(val, ',')) {
          auto colon = tok.find(':');
          if (colon == std::string::npos) fail("tgpa entries are P:M");
          cfg.tgpa.emplace_back(parse_double_tok(tok.substr(0, colon)),
                                uint32_t(parse_u64_tok(tok.substr(colon + 1))));
        }
      } else if (key == "schedule") {
        cfg.schedule = val;
      } else if (key == "tmax") {
        cfg.tmax = parse_u64_tok(val);
      } else if (key == "kmax") {
        cfg.kmax = uint32_t(parse_u64_tok(val));
      } else {
        fail("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      std::string what = e.what();
      if (what.compare(0, name.size(), name) == 0) throw;
      fail(what);
    }
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream ifs(path);
  if (!ifs) throw std::invalid_argument("cannot open config file " + path);
  return parse(ifs, path);
}

void ExperimentConfig::validate() const {
  auto bad = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (experiment != "robustness" && experiment != "clustering_table" &&
      experiment != "exponent_sweep" && experiment != "oracle_check")
    bad("unknown experiment '" + experiment + "'");
  if (reps < 1) bad("reps must be at least 1");
  for (double f : fractions)
    if (!(f > 0.0) || f > 1.0) bad("fractions must lie in (0, 1]");
  if (!(burn > 0.0) || !(burn < 1.0)) bad("burn must lie in (0, 1)");
  if (experiment == "robustness") {
    if (graphs < 1) bad("graphs must be at least 1");
    if (nodes < 10) bad("nodes must be at least 10");
    if (bootstraps < 1) bad("bootstraps must be at least 1");
    if (eigs < 1) bad("eigs must be at least 1");
    if (betas.empty()) bad("betas must not be empty");
    if (methods.empty()) bad("methods must not be empty");
    if (fractions.empty()) bad("fractions must not be empty");
    for (double x : betas)
      if (!(x > 1.0)) bad("betas must exceed 1");
  } else if (experiment == "clustering_table") {
    if (rows.empty()) bad("rows must not be empty");
  } else if (experiment == "exponent_sweep") {
    if (targets.empty() && gpa_p.empty() && tgpa.empty())
      bad("exponent_sweep needs targets, gpa_p, or tgpa rows");
    if (nodes < 10) bad("nodes must be at least 10");
    for (double x : targets)
      if (!(x > 1.0)) bad("targets must exceed 1");
    for (double p : gpa_p)
      if (!(p > 0.0) || p > 1.0) bad("gpa_p values must lie in (0, 1]");
    for (auto [p, m] : tgpa) {
      if (!(p > 0.0) || p > 1.0) bad("tgpa p values must lie in (0, 1]");
      if (m < 1) bad("tgpa m values must be at least 1");
    }
  } else {  // oracle_check
    if (tmax < 1) bad("tmax must be at least 1");
    if (kmax < 1) bad("kmax must be at least 1");
  }
}

std::string ExperimentConfig::describe() const {
  std::ostringstream os;
  auto list = [&](const std::vector<double>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i)
      s += (i ? "," : "") + g10(xs[i]);
    return s;
  };
  os << "experiment=" << experiment << "\n";
  os << "seed=" << master_seed << "\n";
  os << "nodes=" << nodes << "\n";
  os << "graphs=" << graphs << "\n";
  os << "reps=" << reps << "\n";
  os << "bootstraps=" << bootstraps << "\n";
  os << "betas=" << list(betas) << "\n";
  os << "methods=";
  for (size_t i = 0; i < methods.size(); ++i)
    os << (i ? "," : "") << sample_method_name(methods[i]);
  os << "\n";
  os << "fractions=" << list(fractions) << "\n";
  os << "burn=" << g10(burn) << "\n";
  os << "eigs=" << eigs << "\n";
  os << "svg=" << (svg ? 1 : 0) << "\n";
  os << "rows=";
  for (size_t i = 0; i < rows.size(); ++i) os << (i ? ";" : "") << rows[i];
  os << "\n";
  os << "targets=" << list(targets) << "\n";
  os << "gpa_p=" << list(gpa_p) << "\n";
  os << "tgpa=";
  for (size_t i = 0; i < tgpa.size(); ++i)
    os << (i ? "," : "") << g10(tgpa[i].first) << ":" << tgpa[i].second;
  os << "\n";
  os << "schedule=" << schedule << "\n";
  os << "tmax=" << tmax << "\n";
  os << "kmax=" << kmax << "\n";
  return os.str();
}

uint64_t ExperimentConfig::config_hash() const { return Rng::hash_str(describe()); }

RobustnessResult run_robustness(const ExperimentConfig& cfg) {
  RobustnessResult res;
  FitOptions fitopt;
  for (uint32_t gid = 0; gid < cfg.graphs; ++gid) {
    const double target = cfg.betas[gid % cfg.betas.size()];

    SimpleGraph g;
    PowerLawFit base_deg, base_spec;
    bool ok = false;
    uint32_t attempt = 0;
    for (; attempt <= 5; ++attempt) {
      GeneratorConfig gen;
      gen.model = Model::tgpa_schedule;
      gen.schedule = Schedule::target_exponent(target);
      gen.init = GraphSpec::empty();
      gen.target_nodes = cfg.nodes;
      gen.seed = chain("robustness/graph", cfg.master_seed, gid, attempt);
      g = simplify(generate(gen));
      base_deg = fit_degree_tail(
          g, cfg.bootstraps,
          chain("robustness/base-deg", cfg.master_seed, gid, attempt), fitopt);
      base_spec = fit_spectral_tail(
          g, cfg.eigs, cfg.bootstraps,
          chain("robustness/base-spec", cfg.master_seed, gid, attempt), fitopt);
      if (base_deg.significant && base_spec.significant) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      ++res.graphs_aborted;
      res.notes.push_back("graph " + std::to_string(gid) + " (target beta " +
                          g10(target) +
                          ") aborted: base fits stayed insignificant after 6 attempts");
      continue;
    }
    if (attempt > 0)
      res.notes.push_back("graph " + std::to_string(gid) + " regenerated " +
                          std::to_string(attempt) +
                          " time(s) before both base fits were significant");

    for (SampleMethod method : cfg.methods) {
      for (double fraction : cfg.fractions) {
        for (uint32_t rep = 0; rep < cfg.reps; ++rep) {
          RobustnessRow row;
          row.graph_id = gid;
          row.target_beta = target;
          row.method = method;
          row.fraction = fraction;
          row.rep = rep;
          PowerLawFit deg, spec;
          if (fraction == 1.0) {
            deg = base_deg;
            spec = base_spec;
            row.n_sampled_nodes = g.node_count();
            row.n_sampled_edges = g.edge_count();
          } else {
            uint64_t cell =
                chain("robustness/cell", cfg.master_seed, gid,
                      Rng::hash_str(sample_method_name(method)), dbits(fraction), rep);
            Rng rng(cell);
            SampleResult s;
            switch (method) {
              case SampleMethod::forest_fire:
                s = forest_fire(g, cfg.burn, fraction, rng);
                break;
              case SampleMethod::dfs:
                s = dfs_sample(g, fraction, rng);
                break;
              case SampleMethod::random_edge:
                s = random_edge_sample(g, fraction, rng);
                break;
            }
            deg = fit_degree_tail(s.graph, cfg.bootstraps,
                                  Rng::hash_combine(cell, 1), fitopt);
            spec = fit_spectral_tail(s.graph, cfg.eigs, cfg.bootstraps,
                                     Rng::hash_combine(cell, 2), fitopt);
            row.n_sampled_nodes = s.graph.node_count();
            row.n_sampled_edges = s.graph.edge_count();
          }
          row.deg_alpha = deg.alpha;
          row.deg_pvalue = deg.p_value.value_or(0.0);
          row.deg_significant = deg.significant;
          row.spec_alpha = spec.alpha;
          row.spec_pvalue = spec.p_value.value_or(0.0);
          row.spec_significant = spec.significant;
          res.rows.push_back(row);
        }
      }
    }
  }
  return res;
}

int write_robustness_outputs(const ExperimentConfig& cfg,
                             const RobustnessResult& result) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  const std::string rows_path = cfg.out_dir + "/robustness_rows.csv";
  {
    auto ofs = open_out(rows_path);
    write_metadata(ofs, cfg);
    for (const auto& note : result.notes) ofs << "# note: " << note << "\n";
    ofs << "graph_id,target_beta,method,fraction,rep,deg_alpha,deg_pvalue,"
           "deg_significant,spec_alpha,spec_pvalue,spec_significant,"
           "n_sampled_nodes,n_sampled_edges\n";
    for (const auto& r : result.rows) {
      ofs << r.graph_id << ',' << g10(r.target_beta) << ','
          << sample_method_name(r.method) << ',' << g10(r.fraction) << ','
          << r.rep << ',' << g10(r.deg_alpha) << ',' << g10(r.deg_pvalue) << ','
          << (r.deg_significant ? 1 : 0) << ',' << g10(r.spec_alpha) << ','
          << g10(r.spec_pvalue) << ',' << (r.spec_significant ? 1 : 0) << ','
          << r.n_sampled_nodes << ',' << r.n_sampled_edges << "\n";
    }
  }

  const std::string rates_path = cfg.out_dir + "/robustness_rates.csv";
  {
    auto ofs = open_out(rates_path);
    write_metadata(ofs, cfg);
    ofs << "method,fraction,rows,deg_rate,spec_rate,"
           "deg_p_q25,deg_p_median,deg_p_q75,deg_p_iqr,"
           "spec_p_q25,spec_p_median,spec_p_q75,spec_p_iqr\n";
    for (SampleMethod method : cfg.methods) {
      for (double fraction : cfg.fractions) {
        std::vector<double> deg_p, spec_p;
        uint64_t n = 0, deg_sig = 0, spec_sig = 0;
        for (const auto& r : result.rows) {
          if (r.method != method || r.fraction != fraction) continue;
          ++n;
          deg_sig += r.deg_significant;
          spec_sig += r.spec_significant;
          deg_p.push_back(r.deg_pvalue);
          spec_p.push_back(r.spec_pvalue);
        }
        if (n == 0) continue;
        auto q = [](const std::vector<double>& xs, double p) {
          return quantile_r7(xs, p);
        };
        double dq1 = q(deg_p, 0.25), dq2 = q(deg_p, 0.5), dq3 = q(deg_p, 0.75);
        double sq1 = q(spec_p, 0.25), sq2 = q(spec_p, 0.5), sq3 = q(spec_p, 0.75);
        ofs << sample_method_name(method) << ',' << g10(fraction) << ',' << n
            << ',' << g10(double(deg_sig) / double(n)) << ','
            << g10(double(spec_sig) / double(n)) << ',' << g10(dq1) << ','
            << g10(dq2) << ',' << g10(dq3) << ',' << g10(dq3 - dq1) << ','
            << g10(sq1) << ',' << g10(sq2) << ',' << g10(sq3) << ','
            << g10(sq3 - sq1) << "\n";
      }
    }
  }

  if (cfg.svg && !result.rows.empty()) {
    emit_svg(result.rows, SvgKind::violin, cfg.out_dir + "/robustness_violin.svg");
    emit_svg(result.rows, SvgKind::scatter, cfg.out_dir + "/robustness_scatter.svg");
  }
  return result.graphs_aborted > 0 ? 3 : 0;
}

namespace {

struct TableRow {
  std::string label;
  bool generated = false;
  GeneratorConfig gen;
  std::string path;
};

TableRow parse_table_row(const std::string& token) {
  TableRow row;
  row.label = token;
  auto colon = token.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("bad table row '" + token + "'");
  const std::string kind = token.substr(0, colon);
  const std::string rest = token.substr(colon + 1);
  if (kind == "file") {
    row.path = rest;
    return row;
  }
  auto parts = split(rest, ',');
  row.generated = true;
  if (kind == "tgpa") {
    if (parts.size() != 4)
      throw std::invalid_argument("tgpa rows are tgpa:N,P,M,K0");
    row.gen.model = Model::tgpa_pq;
    row.gen.target_nodes = uint32_t(parse_u64_tok(parts[0]));
    row.gen.p = parse_double_tok(parts[1]);
    row.gen.m = uint32_t(parse_u64_tok(parts[2]));
    row.gen.init = GraphSpec::clique(uint32_t(parse_u64_tok(parts[3])));
  } else if (kind == "gpa") {
    if (parts.size() != 4)
      throw std::invalid_argument("gpa rows are gpa:N,P,R,K0");
    row.gen.model = Model::gpa_avin;
    row.gen.target_nodes = uint32_t(parse_u64_tok(parts[0]));
    row.gen.p = parse_double_tok(parts[1]);
    row.gen.r = parse_double_tok(parts[2]);
    row.gen.q = std::max(0.0, 1.0 - row.gen.p - row.gen.r);
    row.gen.init = GraphSpec::clique(uint32_t(parse_u64_tok(parts[3])));
  } else {
    throw std::invalid_argument("unknown table row kind '" + kind + "'");
  }
  return row;
}

}  // namespace

std::vector<ClusteringRowStats> run_clustering_table(const ExperimentConfig& cfg) {
  std::vector<ClusteringRowStats> out;
  for (size_t ri = 0; ri < cfg.rows.size(); ++ri) {
    TableRow row = parse_table_row(cfg.rows[ri]);
    ClusteringRowStats stats;
    stats.label = row.label;
    std::vector<double> ns, edges, glob, loc, hog, hol;
    if (row.generated) {
      for (uint32_t rep = 0; rep < cfg.reps; ++rep) {
        GeneratorConfig gen = row.gen;
        gen.seed = chain("clustering", cfg.master_seed, uint64_t(ri), rep);
        auto g = simplify(generate(gen));
        auto rep_stats = clustering(g);
        ns.push_back(double(g.node_count()));
        edges.push_back(double(g.edge_count()));
        glob.push_back(rep_stats.global);
        loc.push_back(rep_stats.local_avg);
        hog.push_back(rep_stats.ho_global);
        hol.push_back(rep_stats.ho_local_avg);
      }
    } else {
      auto g = simplify(load_edge_list(row.path));
      auto rep_stats = clustering(g);
      ns.push_back(double(g.node_count()));
      edges.push_back(double(g.edge_count()));
      glob.push_back(rep_stats.global);
      loc.push_back(rep_stats.local_avg);
      hog.push_back(rep_stats.ho_global);
      hol.push_back(rep_stats.ho_local_avg);
    }
    stats.reps = uint32_t(ns.size());
    stats.n_mean = mean_sd(ns).first;
    std::tie(stats.edges_mean, stats.edges_sd) = mean_sd(edges);
    std::tie(stats.global_mean, stats.global_sd) = mean_sd(glob);
    std::tie(stats.local_mean, stats.local_sd) = mean_sd(loc);
    std::tie(stats.ho_global_mean, stats.ho_global_sd) = mean_sd(hog);
    std::tie(stats.ho_local_mean, stats.ho_local_sd) = mean_sd(hol);
    out.push_back(std::move(stats));
  }
  return out;
}

std::string render_clustering_text(const std::vector<ClusteringRowStats>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"model", "n", "edges", "global", "local", "ho_global", "ho_local"});
  auto pm = [](double m, double s, const char* fmt) {
    char buf[80];
    std::snprintf(buf, sizeof buf, fmt, m, s);
    return std::string(buf);
  };
  for (const auto& r : rows) {
    cells.push_back({r.label, g10(r.n_mean),
                     pm(r.edges_mean, r.edges_sd, "%.1f ± %.1f"),
                     pm(r.global_mean, r.global_sd, "%.4f ± %.4f"),
                     pm(r.local_mean, r.local_sd, "%.4f ± %.4f"),
                     pm(r.ho_global_mean, r.ho_global_sd, "%.4f ± %.4f"),
                     pm(r.ho_local_mean, r.ho_local_sd, "%.4f ± %.4f")});
  }
  std::vector<size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += "\n";
  }
  return out;
}

int write_clustering_outputs(const ExperimentConfig& cfg,
                             const std::vector<ClusteringRowStats>& rows) {
  std::filesystem::create_directories(cfg.out_dir);
  {
    auto ofs = open_out(cfg.out_dir + "/clustering_table.csv");
    write_metadata(ofs, cfg);
    ofs << "label,reps,n_mean,edges_mean,edges_sd,global_mean,global_sd,"
           "local_mean,local_sd,ho_global_mean,ho_global_sd,"
           "ho_local_mean,ho_local_sd\n";
    for (const auto& r : rows) {
      ofs << quoted(r.label) << ',' << r.reps << ',' << g10(r.n_mean) << ','
          << g10(r.edges_mean) << ',' << g10(r.edges_sd) << ','
          << g10(r.global_mean) << ',' << g10(r.global_sd) << ','
          << g10(r.local_mean) << ',' << g10(r.local_sd) << ','
          << g10(r.ho_global_mean) << ',' << g10(r.ho_global_sd) << ','
          << g10(r.ho_local_mean) << ',' << g10(r.ho_local_sd) << "\n";
    }
  }
  auto ofs = open_out(cfg.out_dir + "/clustering_table.txt");
  ofs << render_clustering_text(rows);
  return 0;
}

std::vector<SweepRow> run_exponent_sweep(const ExperimentConfig& cfg) {
  std::vector<SweepRow> out;
  FitOptions fitopt;
  uint64_t row_idx = 0;
  auto add_row = [&](const std::string& label, double target, double oracle,
                     GeneratorConfig gen) {
    gen.target_nodes = cfg.nodes;
    gen.seed = chain("sweep", cfg.master_seed, row_idx++);
    auto g = simplify(generate(gen));
    SweepRow row;
    row.label = label;
    row.target_beta = target;
    row.oracle_beta = oracle;
    row.n_nodes = g.node_count();
    row.n_edges = g.edge_count();
    row.avg_degree = 2.0 * double(g.edge_count()) / double(g.node_count());
    row.deg_beta = fit_degree_tail(g, 0, 0, fitopt).alpha;
    row.spec_beta = (fit_spectral_tail(g, cfg.eigs, 0, 0, fitopt).alpha + 1.0) / 2.0;
    out.push_back(std::move(row));
  };
  for (double x : cfg.targets) {
    GeneratorConfig gen;
    gen.model = Model::tgpa_schedule;
    gen.schedule = Schedule::target_exponent(x);
    gen.init = GraphSpec::empty();
    add_row("tgpa-schedule:x=" + g10(x), x, gen.schedule.oracle_beta(), gen);
  }
  for (double p : cfg.gpa_p) {
    GeneratorConfig gen;
    gen.model = Model::gpa_contract;
    gen.p = p;
    gen.m = 1;
    gen.init = GraphSpec::empty();
    add_row("gpa-contract:p=" + g10(p), beta_gpa_contract(p), beta_gpa_contract(p), gen);
  }
  for (auto [p, m] : cfg.tgpa) {
    GeneratorConfig gen;
    gen.model = Model::tgpa_pq;
    gen.p = p;
    gen.m = m;
    gen.init = GraphSpec::clique(3);
    add_row("tgpa-pq:p=" + g10(p) + ",m=" + std::to_string(m), beta_tgpa_pq(p),
            beta_tgpa_pq(p), gen);
  }
  return out;
}

int write_sweep_outputs(const ExperimentConfig& cfg,
                        const std::vector<SweepRow>& rows) {
  std::filesystem::create_directories(cfg.out_dir);
  auto ofs = open_out(cfg.out_dir + "/exponent_sweep.csv");
  write_metadata(ofs, cfg);
  ofs << "label,target_beta,deg_beta,spec_beta,oracle_beta,n_nodes,n_edges,"
         "avg_degree\n";
  for (const auto& r : rows) {
    ofs << quoted(r.label) << ',' << g10(r.target_beta) << ',' << g10(r.deg_beta)
        << ',' << g10(r.spec_beta) << ',' << g10(r.oracle_beta) << ','
        << r.n_nodes << ',' << r.n_edges << ',' << g10(r.avg_degree) << "\n";
  }
  return 0;
}

Schedule parse_schedule_spec(const std::string& spec) {
  auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "target") return Schedule::target_exponent(parse_double_tok(rest));
  if (kind == "const") {
    auto parts = split(rest, ',');
    if (parts.size() != 3)
      throw std::invalid_argument("const schedules are const:P,R,Q");
    return Schedule::constant(parse_double_tok(parts[0]), parse_double_tok(parts[1]),
                              parse_double_tok(parts[2]));
  }
  throw std::invalid_argument("unknown schedule '" + spec + "'");
}

std::vector<OracleRow> run_oracle_check(const ExperimentConfig& cfg) {
  Schedule sched = parse_schedule_spec(cfg.schedule);
  RecursionOptions opt;
  opt.steps = cfg.tmax;
  opt.kmax = cfg.kmax;
  auto rec = degree_recursion(sched, opt);
  EventMix lim = sched.limit_mix();
  auto closed = closed_form_mass(sched.gamma_limit(), lim.p + 3.0 * lim.q, cfg.kmax);
  std::vector<OracleRow> out;
  for (uint32_t k = 1; k <= cfg.kmax; ++k) {
    OracleRow row;
    row.k = k;
    row.m_k_over_n = rec.m[k] / rec.n;
    row.closed_form = closed[k];
    row.rel_err = std::abs(row.m_k_over_n - row.closed_form) / row.closed_form;
    out.push_back(row);
  }
  return out;
}

std::string render_oracle_csv(const ExperimentConfig& cfg,
                              const std::vector<OracleRow>& rows) {
  std::ostringstream os;
  write_metadata(os, cfg);
  os << "# schedule=" << cfg.schedule << " tmax=" << cfg.tmax
     << " theta=0 (closed form is theta-free)\n";
  os << "k,m_k_over_n,M_k_closed_form,rel_err\n";
  for (const auto& r : rows)
    os << r.k << ',' << g10(r.m_k_over_n) << ',' << g10(r.closed_form) << ','
       << g10(r.rel_err) << "\n";
  return os.str();
}

int write_oracle_outputs(const ExperimentConfig& cfg,
                         const std::vector<OracleRow>& rows) {
  std::filesystem::create_directories(cfg.out_dir);
  auto ofs = open_out(cfg.out_dir + "/oracle_check.csv");
  ofs << render_oracle_csv(cfg, rows);
  return 0;
}

int run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment == "robustness") {
    auto result = run_robustness(cfg);
    for (const auto& note : result.notes) std::cerr << "note: " << note << "\n";
    int code = write_robustness_outputs(cfg, result);
    std::cout << "wrote " << cfg.out_dir << "/robustness_rows.csv ("
              << result.rows.size() << " rows)\n";
    std::cout << "wrote " << cfg.out_dir << "/robustness_rates.csv\n";
    if (cfg.svg && !result.rows.empty())
      std::cout << "wrote " << cfg.out_dir << "/robustness_violin.svg and "
                << cfg.out_dir << "/robustness_scatter.svg\n";
    return code;
  }
  if (cfg.experiment == "clustering_table") {
    auto rows = run_clustering_table(cfg);
    std::cout << render_clustering_text(rows);
    write_clustering_outputs(cfg, rows);
    std::cout << "wrote " << cfg.out_dir << "/clustering_table.csv\n";
    return 0;
  }
  if (cfg.experiment == "exponent_sweep") {
    auto rows = run_exponent_sweep(cfg);
    write_sweep_outputs(cfg, rows);
    std::cout << "wrote " << cfg.out_dir << "/exponent_sweep.csv ("
              << rows.size() << " rows)\n";
    return 0;
  }
  auto rows = run_oracle_check(cfg);
  write_oracle_outputs(cfg, rows);
  std::cout << "wrote " << cfg.out_dir << "/oracle_check.csv\n";
  return 0;
}

double quantile_r7(std::vector<double> xs, double q) {
  if (xs.empty()) throw std::invalid_argument("quantile of an empty sample");
  q = std::clamp(q, 0.0, 1.0);
  std::sort(xs.begin(), xs.end());
  const double h = q * double(xs.size() - 1);
  const size_t lo = size_t(h);
  if (lo + 1 >= xs.size()) return xs.back();
  return xs[lo] + (h - double(lo)) * (xs[lo + 1] - xs[lo]);
}

}  // namespace graphgen
