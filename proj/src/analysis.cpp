#include "graphgen/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "graphgen/rng.hpp"

namespace graphgen {

namespace {

void adjacency_matvec(const SimpleGraph& g, const double* x, double* y) {
  const uint32_t n = g.node_count();
  for (uint32_t u = 0; u < n; ++u) {
    double acc = 0.0;
    for (NodeId v : g.neighbors_of(u)) acc += x[v];
    y[u] = acc;
  }
}

SpectrumResult dense_spectrum(const SimpleGraph& g, uint32_t k, double thresh) {
  const uint32_t n = g.node_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (uint32_t u = 0; u < n; ++u)
    for (NodeId v : g.neighbors_of(u)) a(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);

  SpectrumResult out;
  Eigen::VectorXd y(n);
  for (uint32_t i = 0; i < k; ++i) {
    const uint32_t col = n - 1 - i;  // eigenvalues come back ascending
    const double lam = es.eigenvalues()(col);
    Eigen::VectorXd x = es.eigenvectors().col(col);
    adjacency_matvec(g, x.data(), y.data());
    const double res = (y - lam * x).norm() / x.norm();
    if (res > thresh) break;
    out.eigenvalues.push_back(lam);
    out.residuals.push_back(res);
  }
  out.k_converged = uint32_t(out.eigenvalues.size());
  return out;
}

SpectrumResult lanczos_spectrum(const SimpleGraph& g, uint32_t k,
                                double thresh) {
  const uint32_t n = g.node_count();
  const uint32_t cap = uint32_t(std::min<uint64_t>(n, 3ull * k + 150));
  uint32_t want =
      uint32_t(std::min<uint64_t>(cap, std::max<uint64_t>(2ull * k + 50, 100)));

  Eigen::MatrixXd basis(n, cap);
  Eigen::VectorXd alphas = Eigen::VectorXd::Zero(cap);
  Eigen::VectorXd betas = Eigen::VectorXd::Zero(cap);
  Eigen::VectorXd w(n);

  Rng rng(Rng::hash_combine(Rng::hash_str("spectrum"),
                            (uint64_t(n) << 24) ^ g.edge_count() ^ k));
  auto fresh_unit = [&](uint32_t cols) -> bool {
    // random start orthogonal to everything built so far
    auto dest = basis.col(cols);
    for (int attempt = 0; attempt < 8; ++attempt) {
      for (uint32_t i = 0; i < n; ++i) dest(i) = rng.unit() - 0.5;
      if (cols > 0) {
        auto head = basis.leftCols(cols);
        dest -= head * (head.transpose() * dest);
        dest -= head * (head.transpose() * dest);
      }
      const double nrm = dest.norm();
      if (nrm > 1e-6) {
        dest /= nrm;
        return true;
      }
    }
    return false;
  };

  uint32_t built = 0;  // processed columns; basis.col(built) is ready next
  bool room = fresh_unit(0);
  const double breakdown = 1e-10 * std::max(1.0, thresh / 1e-8);

  for (;;) {
    while (room && built < want) {
      const uint32_t j = built;
      adjacency_matvec(g, basis.col(j).data(), w.data());
      alphas(j) = basis.col(j).dot(w);
      w -= alphas(j) * basis.col(j);
      auto head = basis.leftCols(j + 1);
      w -= head * (head.transpose() * w);
      w -= head * (head.transpose() * w);
      const double beta = w.norm();
      built = j + 1;
      if (built == cap) break;
      if (beta <= breakdown) {
        betas(j) = 0.0;
        room = fresh_unit(built);
      } else {
        betas(j) = beta;
        basis.col(built) = w / beta;
      }
    }

    const uint32_t m = built;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (uint32_t i = 0; i < m; ++i) {
      t(i, i) = alphas(i);
      if (i + 1 < m && betas(i) != 0.0) t(i, i + 1) = t(i + 1, i) = betas(i);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);

    const uint32_t avail = std::min<uint32_t>(k, m);
    bool settled = true;
    if (m < cap && room) {
      const double tail = (m > 0) ? betas(m - 1) : 0.0;
      for (uint32_t i = 0; i < avail; ++i) {
        const double est = std::abs(tail * es.eigenvectors()(m - 1, m - 1 - i));
        if (est > 0.5 * thresh) {
          settled = false;
          break;
        }
      }
    }
    if (settled || m >= cap || !room) {
      Eigen::MatrixXd s(m, avail);
      for (uint32_t i = 0; i < avail; ++i)
        s.col(i) = es.eigenvectors().col(m - 1 - i);
      Eigen::MatrixXd ritz = basis.leftCols(m) * s;

      SpectrumResult out;
      Eigen::VectorXd y(n);
      for (uint32_t i = 0; i < avail; ++i) {
        const double lam = es.eigenvalues()(m - 1 - i);
        Eigen::VectorXd x = ritz.col(i);
        adjacency_matvec(g, x.data(), y.data());
        const double res = (y - lam * x).norm() / x.norm();
        if (res > thresh) break;
        out.eigenvalues.push_back(lam);
        out.residuals.push_back(res);
      }
      out.k_converged = uint32_t(out.eigenvalues.size());
      return out;
    }
    want = std::min(cap, want + std::max<uint32_t>(50, want / 2));
  }
}

}  // namespace

SpectrumResult top_eigenvalues(const SimpleGraph& g, uint32_t k,
                               double tolerance) {
  if (tolerance <= 0.0)
    throw std::invalid_argument("top_eigenvalues: tolerance must be positive");
  const uint32_t n = g.node_count();
  if (k > n) throw std::invalid_argument("top_eigenvalues: k exceeds node count");

  SpectrumResult out;
  if (k > 0) {
    uint32_t maxdeg = 0;
    for (uint32_t u = 0; u < n; ++u) maxdeg = std::max(maxdeg, g.degree(u));
    const double thresh = tolerance * std::max(1.0, double(maxdeg));
    if (g.edge_count() == 0) {
      out.eigenvalues.assign(k, 0.0);
      out.residuals.assign(k, 0.0);
      out.k_converged = k;
    } else if (n <= 128 || 4ull * k >= n) {
      out = dense_spectrum(g, k, thresh);
    } else {
      out = lanczos_spectrum(g, k, thresh);
    }
  }
  out.k_requested = k;
  return out;
}

std::vector<uint32_t> degree_sequence(const SimpleGraph& g) {
  return g.degrees();
}

namespace {

// neighbors ranked above u by (degree, id); keeps per-list work near the
// graph's arboricity instead of the raw degree
struct ForwardLists {
  std::vector<uint64_t> offsets;
  std::vector<NodeId> targets;
};

ForwardLists build_forward(const SimpleGraph& g) {
  const uint32_t n = g.node_count();
  std::vector<uint32_t> rank(n);
  {
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
      return a < b;
    });
    for (uint32_t i = 0; i < n; ++i) rank[order[i]] = i;
  }
  ForwardLists f;
  f.offsets.assign(n + 1, 0);
  for (uint32_t u = 0; u < n; ++u)
    for (NodeId v : g.neighbors_of(u))
      if (rank[v] > rank[u]) ++f.offsets[u + 1];
  for (uint32_t u = 0; u < n; ++u) f.offsets[u + 1] += f.offsets[u];
  f.targets.resize(f.offsets[n]);
  std::vector<uint64_t> cursor(f.offsets.begin(), f.offsets.end() - 1);
  for (uint32_t u = 0; u < n; ++u)
    for (NodeId v : g.neighbors_of(u))
      if (rank[v] > rank[u]) f.targets[cursor[u]++] = v;
  return f;
}

}  // namespace

ClusteringReport clustering(const SimpleGraph& g, const ClusteringOptions& opt) {
  const uint32_t n = g.node_count();
  ClusteringReport rep;
  if (n == 0) return rep;

  ForwardLists f = build_forward(g);
  auto fwd = [&](uint32_t u) {
    return std::pair<const NodeId*, const NodeId*>{
        f.targets.data() + f.offsets[u], f.targets.data() + f.offsets[u + 1]};
  };

  std::vector<uint64_t> tri(n, 0);
  std::vector<uint32_t> mark(n, kInvalidNode);
  for (uint32_t u = 0; u < n; ++u) {
    auto [ub, ue] = fwd(u);
    for (const NodeId* p = ub; p != ue; ++p) mark[*p] = u;
    for (const NodeId* p = ub; p != ue; ++p) {
      const NodeId v = *p;
      auto [vb, ve] = fwd(v);
      for (const NodeId* q = vb; q != ve; ++q) {
        const NodeId w = *q;
        if (mark[w] == u) {
          ++rep.triangles;
          ++tri[u];
          ++tri[v];
          ++tri[w];
        }
      }
    }
  }

  std::vector<uint64_t> k4;
  if (opt.higher_order) {
    k4.assign(n, 0);
    std::vector<uint64_t> mark2(n, 0);
    uint64_t stamp = 0;
    std::vector<NodeId> common;
    for (uint32_t u = 0; u < n; ++u) {
      auto [ub, ue] = fwd(u);
      for (const NodeId* p = ub; p != ue; ++p) mark[*p] = u;
      for (const NodeId* p = ub; p != ue; ++p) {
        const NodeId v = *p;
        common.clear();
        auto [vb, ve] = fwd(v);
        for (const NodeId* q = vb; q != ve; ++q)
          if (mark[*q] == u) common.push_back(*q);
        if (common.size() < 2) continue;
        ++stamp;
        for (NodeId w : common) mark2[w] = stamp;
        for (NodeId w : common) {
          auto [wb, we] = fwd(w);
          for (const NodeId* q = wb; q != we; ++q) {
            const NodeId x = *q;
            if (mark2[x] == stamp) {
              ++rep.four_cliques;
              ++k4[u];
              ++k4[v];
              ++k4[w];
              ++k4[x];
            }
          }
        }
      }
    }
  }

  double local_sum = 0.0;
  double ho_local_sum = 0.0;
  for (uint32_t u = 0; u < n; ++u) {
    const uint64_t d = g.degree(u);
    if (d >= 2) {
      rep.wedges += d * (d - 1);
      local_sum += 2.0 * double(tri[u]) / (double(d) * double(d - 1));
      rep.three_wedges += tri[u] * (d - 2);
      if (opt.higher_order && tri[u] > 0 && d > 2)
        ho_local_sum += 3.0 * double(k4[u]) / (double(tri[u]) * double(d - 2));
    }
  }
  rep.global = rep.wedges ? 6.0 * double(rep.triangles) / double(rep.wedges) : 0.0;
  rep.local_avg = local_sum / double(n);
  if (opt.higher_order) {
    rep.ho_global =
        rep.three_wedges ? 12.0 * double(rep.four_cliques) / double(rep.three_wedges)
                         : 0.0;
    rep.ho_local_avg = ho_local_sum / double(n);
  }
  return rep;
}

}  // namespace graphgen
