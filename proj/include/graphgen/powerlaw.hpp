#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace graphgen {

struct FitOptions {
  double significance_threshold = 0.1;
  uint64_t significance_min_tail = 25;
  // xmin candidates keep at least this many tail points (relaxed only when no
  // candidate qualifies) and at least two distinct tail values
  uint64_t min_candidate_tail = 10;
  bool exhaustive_scan = false;  // disable candidate pruning; same result, slower
};

struct PowerLawFit {
  double alpha = 0.0;
  double xmin = 0.0;
  double ks = 0.0;
  uint64_t n_tail = 0;
  std::optional<double> p_value;  // set by bootstrap_pvalue
  bool discrete = false;
  bool significant = false;  // p_value >= threshold and n_tail >= min tail
};

// MLE at a fixed threshold, over the points >= xmin.
double continuous_mle(const std::vector<double>& xs, double xmin);
double discrete_mle(const std::vector<uint64_t>& xs, uint64_t xmin);

// Scan xmin over the distinct data values, fitting the exponent by MLE at each
// and keeping the threshold with the smallest KS distance between the tail and
// the fitted model (first minimum wins ties). The discrete KS is taken against
// the zeta-normalized CDF over the full integer range of the tail, so flat
// stretches of the empirical CDF are checked at both ends.
PowerLawFit fit_continuous(std::vector<double> xs, const FitOptions& opt = {});
PowerLawFit fit_discrete(std::vector<uint64_t> xs, const FitOptions& opt = {});

// Semi-parametric bootstrap: each replicate resamples the empirical body below
// xmin and draws the rest from the fitted tail model, then gets a fresh full
// fit. p_value = fraction of replicates whose KS is at least the observed one;
// replicates use their own derived seeds, so the result does not depend on
// evaluation order. Degenerate replicates (too few distinct values to fit)
// count as exceeding the observed KS.
PowerLawFit bootstrap_pvalue(const PowerLawFit& fit,
                             const std::vector<double>& xs, uint32_t n_boot,
                             uint64_t seed, const FitOptions& opt = {});
PowerLawFit bootstrap_pvalue(const PowerLawFit& fit,
                             const std::vector<uint64_t>& xs, uint32_t n_boot,
                             uint64_t seed, const FitOptions& opt = {});

}  // namespace graphgen
