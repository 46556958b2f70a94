#include "graphgen/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace graphgen {

RecursionCoeffs recursion_coeffs(const EventMix& mix, double alpha, double theta) {
  const double p = mix.p, r = mix.r, q = mix.q;
  RecursionCoeffs c;
  c.A = p * (1 - 2 * alpha + theta) + r * (1 - alpha) * (1 - 2 * alpha + theta) + q;
  c.B = 2 * p * (alpha - theta) + 2 * r * (1 - alpha) * (alpha - theta);
  c.C = p * theta + r * (alpha - alpha * alpha + theta);
  c.D = 2 * r * alpha * (alpha - theta);
  c.E = r * alpha * theta;
  return c;
}

RecursionCoeffs recursion_coeffs_exact(const EventMix& mix, double alpha, double theta) {
  RecursionCoeffs c = recursion_coeffs(mix, alpha, theta);
  c.C = mix.p * theta + mix.r * (alpha - 2 * alpha * alpha + theta);
  return c;
}

double RecursionResult::degree_sum() const {
  double s = 0;
  for (size_t k = 1; k < m.size(); ++k) s += double(k) * m[k];
  return s;
}

RecursionResult degree_recursion(const Schedule& schedule, const RecursionOptions& opt) {
  if (opt.steps < 1) throw std::invalid_argument("recursion: needs at least one step");
  if (opt.kmax < 5) throw std::invalid_argument("recursion: kmax below 5 is not useful");

  RecursionResult res;
  res.m.assign(opt.kmax + 1, 0.0);
  // step 1, the component fallback: a center of degree 2 and two leaves
  res.m[1] = 2;
  res.m[2] = 1;
  res.n = 3;
  res.e = 2;

  std::vector<double> next(opt.kmax + 1, 0.0);
  for (uint64_t t = 2; t <= opt.steps; ++t) {
    const EventMix mix = schedule.at(t);
    const double inv2e = 1.0 / (2.0 * res.e);
    std::fill(next.begin(), next.end(), 0.0);
    for (uint32_t k = 1; k <= opt.kmax; ++k) {
      const double mk = res.m[k];
      if (mk == 0.0) continue;
      const RecursionCoeffs c = recursion_coeffs(mix, double(k) * inv2e, opt.theta);
      next[k] += mk * c.A;
      const double flow[4] = {c.B, c.C, c.D, c.E};
      for (uint32_t up = 1; up <= 4; ++up) {
        const double amount = mk * flow[up - 1];
        if (amount == 0.0) continue;
        const uint32_t dest = k + up;
        if (dest <= opt.kmax)
          next[dest] += amount;
        else
          res.truncated_degree += double(dest) * amount;
      }
    }
    next[1] += 2 * mix.q;
    next[2] += mix.p + mix.q;
    res.m.swap(next);
    res.n += mix.p + 3 * mix.q;
    res.e += 2;
  }
  res.budget_drift = res.degree_sum() + res.truncated_degree - 2 * res.e;
  return res;
}

double closed_form_beta(double gamma, double y) {
  if (!(y < 3.0)) throw std::invalid_argument("closed form: y must be below 3");
  if (!(gamma > 0.0)) throw std::invalid_argument("closed form: gamma must be positive");
  return 1.0 + 2.0 * gamma / (3.0 - y);
}

std::vector<double> closed_form_mass(double gamma, double y, uint32_t kmax) {
  const double beta = closed_form_beta(gamma, y);
  std::vector<double> mass(size_t(kmax) + 1, 0.0);
  double mk = gamma / (gamma + 1.5 - 0.5 * y);
  for (uint32_t k = 1; k <= kmax; ++k) {
    mass[k] = mk;
    mk *= double(k) / (double(k) + beta);
  }
  return mass;
}

double beta_gpa_contract(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("exponent: p must be positive");
  return (2.0 + p) / p;
}

double beta_tgpa_pq(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("exponent: p must be positive");
  return 1.0 + 1.0 / p;
}

}  // namespace graphgen
