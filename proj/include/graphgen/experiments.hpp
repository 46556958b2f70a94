#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "graphgen/sampling.hpp"
#include "graphgen/schedule.hpp"

namespace graphgen {

inline constexpr const char* kVersion = "0.1.0";

// Parsed experiment description. Every run function reads only the fields its
// experiment uses; the rest keep their defaults and still enter the config
// hash so an output file pins down the exact setup that produced it.
struct ExperimentConfig {
  std::string experiment = "robustness";
  uint64_t master_seed = 1;
  std::string out_dir = ".";

  // graph scale shared by robustness and the sweep
  uint32_t nodes = 2000;
  uint32_t graphs = 10;
  uint32_t reps = 10;
  uint32_t bootstraps = 250;
  std::vector<double> betas = {2.0, 2.5, 3.0, 4.0, 5.0};
  std::vector<SampleMethod> methods = {SampleMethod::forest_fire,
                                       SampleMethod::dfs,
                                       SampleMethod::random_edge};
  std::vector<double> fractions = {0.1, 0.3, 0.5, 0.7, 0.9};
  double burn = 0.7;
  uint32_t eigs = 100;
  bool svg = false;  // also render SVG summaries where supported

  // clustering_table row tokens: tgpa:N,P,M,K0 | gpa:N,P,R,K0 | file:PATH
  std::vector<std::string> rows;

  // exponent_sweep row families
  std::vector<double> targets;                    // scheduled-exponent rows
  std::vector<double> gpa_p;                      // contraction-model rows
  std::vector<std::pair<double, uint32_t>> tgpa;  // (p, m) rows

  // oracle_check
  std::string schedule = "target:2";  // target:X | const:P,R,Q
  uint64_t tmax = 1000000;
  uint32_t kmax = 16;

  // "key = value" lines, '#' comments, optional cosmetic [section] headers.
  static ExperimentConfig parse(std::istream& in, const std::string& name);
  static ExperimentConfig parse_file(const std::string& path);

  void validate() const;  // throws std::invalid_argument

  // Canonical key=value dump of everything that shapes the data (output
  // locations excluded), and its FNV-1a hash as stamped into CSV headers.
  std::string describe() const;
  uint64_t config_hash() const;
};

struct RobustnessRow {
  uint32_t graph_id = 0;
  double target_beta = 0.0;
  SampleMethod method = SampleMethod::forest_fire;
  double fraction = 1.0;
  uint32_t rep = 0;
  double deg_alpha = 0.0;
  double deg_pvalue = 0.0;
  bool deg_significant = false;
  double spec_alpha = 0.0;
  double spec_pvalue = 0.0;
  bool spec_significant = false;
  uint32_t n_sampled_nodes = 0;
  uint64_t n_sampled_edges = 0;
};

struct RobustnessResult {
  std::vector<RobustnessRow> rows;
  std::vector<std::string> notes;  // regeneration and abort log
  uint32_t graphs_aborted = 0;
};

// Generates the graph set, gates each graph on both base fits being
// significant (up to 5 reseeded regenerations, logged), then fills one row
// per (graph, method, fraction, rep). fraction == 1 rows reuse the base
// verdicts. Deterministic in cfg alone.
RobustnessResult run_robustness(const ExperimentConfig& cfg);

// robustness_rows.csv plus robustness_rates.csv (per method and fraction:
// significance rates and p-value quartiles), and the SVG summaries when
// cfg.svg is set. Returns the process exit code: 3 when any graph aborted.
int write_robustness_outputs(const ExperimentConfig& cfg,
                             const RobustnessResult& result);

struct ClusteringRowStats {
  std::string label;
  uint32_t reps = 0;
  double n_mean = 0.0;
  double edges_mean = 0.0, edges_sd = 0.0;
  double global_mean = 0.0, global_sd = 0.0;
  double local_mean = 0.0, local_sd = 0.0;
  double ho_global_mean = 0.0, ho_global_sd = 0.0;
  double ho_local_mean = 0.0, ho_local_sd = 0.0;
};

std::vector<ClusteringRowStats> run_clustering_table(const ExperimentConfig& cfg);
std::string render_clustering_text(const std::vector<ClusteringRowStats>& rows);
int write_clustering_outputs(const ExperimentConfig& cfg,
                             const std::vector<ClusteringRowStats>& rows);

struct SweepRow {
  std::string label;
  double target_beta = 0.0;
  double deg_beta = 0.0;    // exponent fitted to the degree tail
  double spec_beta = 0.0;   // (eigenvalue-fit exponent + 1) / 2
  double oracle_beta = 0.0;
  uint32_t n_nodes = 0;
  uint64_t n_edges = 0;
  double avg_degree = 0.0;
};

std::vector<SweepRow> run_exponent_sweep(const ExperimentConfig& cfg);
int write_sweep_outputs(const ExperimentConfig& cfg,
                        const std::vector<SweepRow>& rows);

struct OracleRow {
  uint32_t k = 0;
  double m_k_over_n = 0.0;
  double closed_form = 0.0;
  double rel_err = 0.0;
};

std::vector<OracleRow> run_oracle_check(const ExperimentConfig& cfg);
std::string render_oracle_csv(const ExperimentConfig& cfg,
                              const std::vector<OracleRow>& rows);
int write_oracle_outputs(const ExperimentConfig& cfg,
                         const std::vector<OracleRow>& rows);

enum class SvgKind { violin, scatter };

// Self-contained SVG, byte-deterministic for fixed input. The violin shows
// the p-value spread per (method, fraction) for degree vs spectral fits; the
// scatter plots the two p-values per cell. Throws on an empty row set.
std::string render_svg(const std::vector<RobustnessRow>& rows, SvgKind kind);
void emit_svg(const std::vector<RobustnessRow>& rows, SvgKind kind,
              const std::string& path);

// Dispatches on cfg.experiment, writes outputs under cfg.out_dir, returns the
// process exit code (0, or 3 for aborted robustness cells).
int run_experiment(const ExperimentConfig& cfg);

// Linear-interpolation quantile (the R type-7 rule) of an unsorted sample.
double quantile_r7(std::vector<double> xs, double q);

// "target:X" or "const:P,R,Q"; numbers accept A/B fractions.
Schedule parse_schedule_spec(const std::string& spec);

}  // namespace graphgen
