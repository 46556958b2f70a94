#include "graphgen/powerlaw.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "graphgen/rng.hpp"

namespace graphgen {

namespace {

[[maybe_unused]] const gsl_error_handler_t* kGslQuiet =
    gsl_set_error_handler_off();

double hz(double s, double q) {
  gsl_sf_result r;
  const int status = gsl_sf_hzeta_e(s, q, &r);
  if (status == GSL_SUCCESS || status == GSL_EUNDRFLW) return r.val;
  throw std::runtime_error("hurwitz zeta evaluation failed");
}

// Shared xmin scan: evaluate the KS distance lazily, seeding a pruning bound
// with a spread of full evaluations and skipping candidates whose probe lower
// bound already exceeds it. The probe slack absorbs rounding differences
// between the probe and full formulas, so pruning never changes the winner:
// first minimum in scan order, exactly as the exhaustive pass would pick.
struct ScanPick {
  uint64_t ci = 0;
  double alpha = 0.0;
  double ks = 0.0;
};

template <typename AlphaFn, typename KsFn, typename ProbeFn>
ScanPick scan_candidates(uint64_t count, bool exhaustive, AlphaFn alpha_at,
                         KsFn ks_at, ProbeFn probe_at) {
  constexpr double kSlack = 1e-12;
  std::vector<double> alphas(count);
  std::vector<double> full(count, -1.0);
  for (uint64_t ci = 0; ci < count; ++ci) alphas[ci] = alpha_at(ci);

  double seed_bound = std::numeric_limits<double>::infinity();
  if (!exhaustive && count > 20) {
    for (uint64_t t = 0; t < 16; ++t) {
      const uint64_t ci = (count - 1) * t / 15;
      if (full[ci] < 0.0 && std::isfinite(alphas[ci])) {
        full[ci] = ks_at(ci, alphas[ci]);
        seed_bound = std::min(seed_bound, full[ci]);
      }
    }
  }

  ScanPick best;
  double best_ks = std::numeric_limits<double>::infinity();
  for (uint64_t ci = 0; ci < count; ++ci) {
    if (!std::isfinite(alphas[ci])) continue;
    if (full[ci] < 0.0) {
      if (!exhaustive) {
        const double bound = std::min(best_ks, seed_bound);
        if (probe_at(ci, alphas[ci]) > bound + kSlack) continue;
      }
      full[ci] = ks_at(ci, alphas[ci]);
    }
    if (full[ci] < best_ks) {
      best_ks = full[ci];
      best = {ci, alphas[ci], full[ci]};
    }
  }
  if (!std::isfinite(best_ks))
    throw std::invalid_argument("power-law fit: no usable threshold");
  return best;
}

struct ContData {
  std::vector<double> xs;  // sorted ascending
  Eigen::ArrayXd lnx;
  Eigen::ArrayXd ramp;
  std::vector<double> suflog;
};

double cont_alpha(const ContData& d, uint64_t i) {
  const double nt = double(d.xs.size() - i);
  return 1.0 + nt / (d.suflog[i] - nt * d.lnx(i));
}

// one pass over the tail: with g_i = F(x_i) - i/nt, the KS sup is
// max(max g, 1/nt - min g)
double cont_ks(const ContData& d, uint64_t i, double alpha) {
  const uint64_t n = d.xs.size();
  const uint64_t nt = n - i;
  Eigen::ArrayXd g =
      (1.0 - ((1.0 - alpha) * (d.lnx.segment(i, nt) - d.lnx(i))).exp()) -
      d.ramp.segment(0, nt) / double(nt);
  return std::max(g.maxCoeff(), 1.0 / double(nt) - g.minCoeff());
}

double cont_probe(const ContData& d, uint64_t i, double alpha) {
  const uint64_t nt = d.xs.size() - i;
  const double lx0 = d.lnx(i);
  double lb = 0.0;
  for (uint64_t t = 0; t < 8; ++t) {
    const uint64_t rel = (nt - 1) * t / 7;
    const double f = 1.0 - std::exp((1.0 - alpha) * (d.lnx(i + rel) - lx0));
    lb = std::max(lb, f - double(rel) / double(nt));
    lb = std::max(lb, double(rel + 1) / double(nt) - f);
  }
  return lb;
}

struct DiscData {
  std::vector<uint64_t> vals, cnt, pref, sufcnt;
  std::vector<double> suflog;
};

double disc_alpha(const DiscData& d, uint64_t pos) {
  const double nt = double(d.sufcnt[pos]);
  return 1.0 +
         nt / (d.suflog[pos] - nt * std::log(double(d.vals[pos]) - 0.5));
}

// KS against the zeta CDF over the whole integer range of the tail: on each
// flat stretch of the empirical CDF the gap is extremal at the ends, so only
// the distinct values and their predecessors need checking
double disc_ks(const DiscData& d, uint64_t pos, double alpha) {
  const uint64_t m = d.vals.size();
  const double nt = double(d.sufcnt[pos]);
  const uint64_t base = pos ? d.pref[pos - 1] : 0;
  const double zmin = hz(alpha, double(d.vals[pos]));
  if (!(zmin > 0.0) || !std::isfinite(zmin)) return 1.0;
  double best = 0.0;
  double zj = zmin;
  for (uint64_t j = pos; j < m; ++j) {
    const double emp = double(d.pref[j] - base) / nt;
    const double zj1 = zj - std::pow(double(d.vals[j]), -alpha);
    best = std::max(best, std::abs(emp - (1.0 - zj1 / zmin)));
    if (j + 1 < m) {
      const double znext = hz(alpha, double(d.vals[j + 1]));
      if (d.vals[j + 1] > d.vals[j] + 1)
        best = std::max(best, std::abs(emp - (1.0 - znext / zmin)));
      zj = znext;
    }
  }
  return best;
}

double disc_probe(const DiscData& d, uint64_t pos, double alpha) {
  const uint64_t m = d.vals.size();
  const double nt = double(d.sufcnt[pos]);
  const uint64_t base = pos ? d.pref[pos - 1] : 0;
  const double zmin = hz(alpha, double(d.vals[pos]));
  if (!(zmin > 0.0) || !std::isfinite(zmin)) return 1.0;
  double lb = 0.0;
  for (uint64_t t = 0; t < 6; ++t) {
    const uint64_t j = pos + (m - 1 - pos) * t / 5;
    const double emp = double(d.pref[j] - base) / nt;
    const double f = 1.0 - hz(alpha, double(d.vals[j]) + 1.0) / zmin;
    lb = std::max(lb, std::abs(emp - f));
  }
  return lb;
}

}  // namespace

double continuous_mle(const std::vector<double>& xs, double xmin) {
  if (!(xmin > 0.0))
    throw std::invalid_argument("continuous_mle: xmin must be positive");
  uint64_t nt = 0;
  double s = 0.0;
  for (double x : xs)
    if (x >= xmin) {
      ++nt;
      s += std::log(x / xmin);
    }
  if (nt == 0 || !(s > 0.0))
    throw std::invalid_argument("continuous_mle: degenerate tail");
  return 1.0 + double(nt) / s;
}

double discrete_mle(const std::vector<uint64_t>& xs, uint64_t xmin) {
  if (xmin < 1)
    throw std::invalid_argument("discrete_mle: xmin must be at least 1");
  uint64_t nt = 0;
  double s = 0.0;
  for (uint64_t x : xs)
    if (x >= xmin) {
      ++nt;
      s += std::log(double(x) / (double(xmin) - 0.5));
    }
  if (nt == 0 || !(s > 0.0))
    throw std::invalid_argument("discrete_mle: degenerate tail");
  return 1.0 + double(nt) / s;
}

PowerLawFit fit_continuous(std::vector<double> xs, const FitOptions& opt) {
  if (xs.size() < 2)
    throw std::invalid_argument("fit_continuous: need at least two values");
  for (double x : xs)
    if (!(x > 0.0) || !std::isfinite(x))
      throw std::invalid_argument("fit_continuous: values must be positive");
  std::sort(xs.begin(), xs.end());
  if (xs.front() == xs.back())
    throw std::invalid_argument("fit_continuous: all values equal");

  const uint64_t n = xs.size();
  ContData d;
  d.lnx = Eigen::Map<const Eigen::ArrayXd>(xs.data(), long(n)).log();
  d.ramp = Eigen::ArrayXd::LinSpaced(long(n), 0.0, double(n - 1));
  d.suflog.assign(n + 1, 0.0);
  for (uint64_t i = n; i-- > 0;) d.suflog[i] = d.suflog[i + 1] + d.lnx(long(i));
  d.xs = std::move(xs);

  const double vmax = d.xs.back();
  auto collect = [&](uint64_t need) {
    std::vector<uint64_t> c;
    for (uint64_t i = 0; i < n; ++i)
      if ((i == 0 || d.xs[i] != d.xs[i - 1]) && d.xs[i] != vmax &&
          n - i >= need)
        c.push_back(i);
    return c;
  };
  std::vector<uint64_t> cand =
      collect(std::max<uint64_t>(opt.min_candidate_tail, 2));
  if (cand.empty()) cand = collect(2);

  ScanPick pick = scan_candidates(
      cand.size(), opt.exhaustive_scan,
      [&](uint64_t ci) { return cont_alpha(d, cand[ci]); },
      [&](uint64_t ci, double a) { return cont_ks(d, cand[ci], a); },
      [&](uint64_t ci, double a) { return cont_probe(d, cand[ci], a); });

  PowerLawFit fit;
  fit.alpha = pick.alpha;
  fit.xmin = d.xs[cand[pick.ci]];
  fit.ks = pick.ks;
  fit.n_tail = n - cand[pick.ci];
  fit.discrete = false;
  return fit;
}

PowerLawFit fit_discrete(std::vector<uint64_t> xs, const FitOptions& opt) {
  if (xs.size() < 2)
    throw std::invalid_argument("fit_discrete: need at least two values");
  for (uint64_t x : xs)
    if (x < 1)
      throw std::invalid_argument("fit_discrete: values must be at least 1");
  std::sort(xs.begin(), xs.end());
  if (xs.front() == xs.back())
    throw std::invalid_argument("fit_discrete: all values equal");

  DiscData d;
  for (uint64_t x : xs) {
    if (d.vals.empty() || d.vals.back() != x) {
      d.vals.push_back(x);
      d.cnt.push_back(1);
    } else {
      ++d.cnt.back();
    }
  }
  const uint64_t m = d.vals.size();
  d.pref.resize(m);
  uint64_t run = 0;
  for (uint64_t j = 0; j < m; ++j) {
    run += d.cnt[j];
    d.pref[j] = run;
  }
  d.sufcnt.assign(m + 1, 0);
  d.suflog.assign(m + 1, 0.0);
  for (uint64_t j = m; j-- > 0;) {
    d.sufcnt[j] = d.sufcnt[j + 1] + d.cnt[j];
    d.suflog[j] = d.suflog[j + 1] + double(d.cnt[j]) * std::log(double(d.vals[j]));
  }

  auto collect = [&](uint64_t need) {
    std::vector<uint64_t> c;
    for (uint64_t j = 0; j + 1 < m; ++j)
      if (d.sufcnt[j] >= need) c.push_back(j);
    return c;
  };
  std::vector<uint64_t> cand =
      collect(std::max<uint64_t>(opt.min_candidate_tail, 2));
  if (cand.empty()) cand = collect(2);

  ScanPick pick = scan_candidates(
      cand.size(), opt.exhaustive_scan,
      [&](uint64_t ci) { return disc_alpha(d, cand[ci]); },
      [&](uint64_t ci, double a) { return disc_ks(d, cand[ci], a); },
      [&](uint64_t ci, double a) { return disc_probe(d, cand[ci], a); });

  PowerLawFit fit;
  fit.alpha = pick.alpha;
  fit.xmin = double(d.vals[cand[pick.ci]]);
  fit.ks = pick.ks;
  fit.n_tail = d.sufcnt[cand[pick.ci]];
  fit.discrete = true;
  return fit;
}

PowerLawFit bootstrap_pvalue(const PowerLawFit& fit,
                             const std::vector<double>& xs, uint32_t n_boot,
                             uint64_t seed, const FitOptions& opt) {
  if (n_boot < 1)
    throw std::invalid_argument("bootstrap_pvalue: n_boot must be positive");
  std::vector<double> sorted(xs);
  std::sort(sorted.begin(), sorted.end());
  const uint64_t n = sorted.size();
  const uint64_t body = uint64_t(
      std::lower_bound(sorted.begin(), sorted.end(), fit.xmin) - sorted.begin());
  const double inv = -1.0 / (fit.alpha - 1.0);

  uint64_t hits = 0;
  for (uint32_t b = 0; b < n_boot; ++b) {
    Rng rng(Rng::hash_combine(seed, b + 1));
    std::vector<double> rep(n);
    for (uint64_t i = 0; i < n; ++i) {
      if (rng.below(n) < body)
        rep[i] = sorted[rng.below(body)];
      else
        rep[i] = fit.xmin * std::pow(1.0 - rng.unit(), inv);
    }
    double ks;
    try {
      ks = fit_continuous(std::move(rep), opt).ks;
    } catch (const std::invalid_argument&) {
      ks = std::numeric_limits<double>::infinity();
    }
    if (ks >= fit.ks) ++hits;
  }
  PowerLawFit out = fit;
  out.p_value = double(hits) / double(n_boot);
  out.significant = *out.p_value >= opt.significance_threshold &&
                    out.n_tail >= opt.significance_min_tail;
  return out;
}

PowerLawFit bootstrap_pvalue(const PowerLawFit& fit,
                             const std::vector<uint64_t>& xs, uint32_t n_boot,
                             uint64_t seed, const FitOptions& opt) {
  if (n_boot < 1)
    throw std::invalid_argument("bootstrap_pvalue: n_boot must be positive");
  std::vector<uint64_t> sorted(xs);
  std::sort(sorted.begin(), sorted.end());
  const uint64_t n = sorted.size();
  const uint64_t xmin = uint64_t(fit.xmin);
  const uint64_t body = uint64_t(
      std::lower_bound(sorted.begin(), sorted.end(), xmin) - sorted.begin());

  // inverse-CDF table for the fitted tail; the sliver of mass past the table
  // is drawn from the continuous tail started at the table edge and rounded
  std::vector<double> cum;
  {
    const double z = hz(fit.alpha, double(xmin));
    double acc = 0.0;
    for (uint64_t a = xmin; a < xmin + 4000000; ++a) {
      acc += std::pow(double(a), -fit.alpha) / z;
      cum.push_back(acc);
      if (acc >= 1.0 - 1e-9) break;
    }
  }
  const double inv = -1.0 / (fit.alpha - 1.0);
  const double edge = double(xmin) + double(cum.size()) - 0.5;

  uint64_t hits = 0;
  for (uint32_t b = 0; b < n_boot; ++b) {
    Rng rng(Rng::hash_combine(seed, b + 1));
    std::vector<uint64_t> rep(n);
    for (uint64_t i = 0; i < n; ++i) {
      if (rng.below(n) < body) {
        rep[i] = sorted[rng.below(body)];
      } else {
        const double u = rng.unit();
        if (u < cum.back()) {
          const uint64_t idx = uint64_t(
              std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
          rep[i] = xmin + idx;
        } else {
          const double v = edge * std::pow(1.0 - rng.unit(), inv);
          rep[i] = v >= 9.0e18 ? uint64_t(9000000000000000000ull)
                               : uint64_t(std::llround(v));
        }
      }
    }
    double ks;
    try {
      ks = fit_discrete(std::move(rep), opt).ks;
    } catch (const std::invalid_argument&) {
      ks = std::numeric_limits<double>::infinity();
    }
    if (ks >= fit.ks) ++hits;
  }
  PowerLawFit out = fit;
  out.p_value = double(hits) / double(n_boot);
  out.significant = *out.p_value >= opt.significance_threshold &&
                    out.n_tail >= opt.significance_min_tail;
  return out;
}

}  // namespace graphgen
