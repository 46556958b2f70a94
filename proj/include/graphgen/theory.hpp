#pragma once

#include <cstdint>
#include <vector>

#include "graphgen/schedule.hpp"

namespace graphgen {

// One row of the expected degree-count update. For mass sitting at degree k,
// A keeps it, B/C/D/E move it up by 1..4, evaluated at alpha = k / (2 e_t)
// with theta the self-loop degree share (zero in the standard setting).
struct RecursionCoeffs {
  double A = 0, B = 0, C = 0, D = 0, E = 0;
};

// The row as printed in the reference derivation. Its C term overshoots, so
// the full set sums to 1 + r alpha^2 instead of 1; degree_recursion uses it
// verbatim and reports the resulting budget drift.
RecursionCoeffs recursion_coeffs(const EventMix& mix, double alpha, double theta);

// Event-exact row: same A, B, D, E, but C = p theta + r (alpha - 2 alpha^2
// + theta). Sums to exactly 1 and pays out exactly 2 p alpha + 4 r alpha of
// degree above the k it keeps. Kept for cross-checks.
RecursionCoeffs recursion_coeffs_exact(const EventMix& mix, double alpha, double theta);

struct RecursionOptions {
  uint64_t steps = 1000000;
  uint32_t kmax = 16;
  double theta = 0.0;
};

struct RecursionResult {
  std::vector<double> m;  // m[k] for k in 1..kmax, m[0] unused
  double n = 0;           // expected vertex count
  double e = 0;           // edges, e_t = 2t from the empty start
  double truncated_degree = 0;  // degree mass that flowed past kmax
  // degree_sum + truncated_degree - 2 e. While nothing has truncated this is
  // exactly the surplus the printed C term injects (zero when r = 0); once
  // mass escapes the cutoff it stops collecting degree, so on long horizons
  // the value is only indicative.
  double budget_drift = 0;
  double degree_sum() const;
};

// Expected degree counts of the scheduled wedge model grown from nothing.
// Step one is always the component fallback (two leaves and a center);
// afterwards each step applies the printed row, then adds the sources
// 2 q_t at k = 1 and p_t + q_t at k = 2. Mass that would pass kmax is
// dropped and tallied in truncated_degree; counts at k <= kmax never
// depend on the cutoff because mass only moves upward.
RecursionResult degree_recursion(const Schedule& schedule, const RecursionOptions& opt);

// Stationary masses M_k = M_1 prod_{j=1}^{k-1} j / (j + beta) with
// M_1 = gamma / (gamma + (3 - y)/2) and beta = closed_form_beta(gamma, y).
// Returned vector is indexed like RecursionResult::m.
std::vector<double> closed_form_mass(double gamma, double y, uint32_t kmax);
double closed_form_beta(double gamma, double y);  // 1 + 2 gamma / (3 - y)

// Degree exponents the mechanisms aim for.
double beta_gpa_contract(double p);  // (2 + p) / p
double beta_tgpa_pq(double p);       // 1 + 1 / p

}  // namespace graphgen
