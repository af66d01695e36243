#include "gradv/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gradv {

double cascade_mass(const CascadeParams& p, double t) {
  double gap = p.a_vv - p.a_uu;
  double scale = std::max(std::abs(p.a_vv), std::abs(p.a_uu));
  if (std::abs(gap) > 1e-12 * scale) {
    return p.a_uv / gap * (std::exp(-t * p.a_vv) - std::exp(-t * p.a_uu));
  }
  return -p.a_uv * t * std::exp(-t * p.a_vv);
}

namespace {

// Poisson weight (t*alpha)^n e^{-t*alpha} / n!; direct product for small n,
// log space beyond n = 30 to avoid overflow.
double poisson_weight(double alpha, long n, double t) {
  double mean = t * alpha;
  if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
  if (n <= 30) {
    double w = std::exp(-mean);
    for (long k = 1; k <= n; ++k) w *= mean / static_cast<double>(k);
    return w;
  }
  double log_w = static_cast<double>(n) * std::log(mean) - mean -
                 std::lgamma(static_cast<double>(n) + 1.0);
  return std::exp(log_w);
}

}  // namespace

double grid_mass(double alpha_x, double alpha_y, long nx, long ny, double t) {
  if (alpha_x < 0.0 || alpha_y < 0.0 || nx < 0 || ny < 0 || t < 0.0) {
    fail(Errc::bad_params, "grid_mass arguments must be nonnegative");
  }
  return poisson_weight(alpha_x, nx, t) * poisson_weight(alpha_y, ny, t);
}

std::pair<double, double> grid_mean(double alpha_x, double alpha_y, double dx,
                                    double dy, double t) {
  return {t * dx * alpha_x, t * dy * alpha_y};
}

std::pair<double, double> grid_alphas(Kind kind, double dx, double dy) {
  if (dx <= 0.0 || dy <= 0.0) fail(Errc::bad_params, "cell sides must be positive");
  switch (kind) {
    case Kind::a3: return {1.0 / dx, 1.0 / dy};
    case Kind::a4: return {1.0 / (2.0 * dx), 1.0 / (2.0 * dy)};
    case Kind::a5: return {1.0 / (dx + dy), 1.0 / (dx + dy)};
    default:
      fail(Errc::bad_params,
           std::string(kind_name(kind)) +
               " does not admit the Poisson product form");
  }
}

double limit_cone_mass(const AdvectionMatrix& m, NodeId v, NodeId u) {
  if (u == v || !m.has_entry(u, v)) {
    fail(Errc::not_a_successor,
         "node " + std::to_string(u) + " is not a successor of " +
             std::to_string(v) + " in the operator pattern");
  }
  double diag = m.diagonal(v);
  if (!(diag > 0.0)) {
    fail(Errc::zero_diagonal, "node " + std::to_string(v));
  }
  return -m.entry(u, v) / diag;
}

AdvectionMatrix laplacian_reference(const Graph& g, LaplacianVariant variant) {
  for (const Edge& e : g.edges()) {
    if (e.length != 1.0) {
      fail(Errc::not_simple_graph, "edge length differs from 1");
    }
    if (!g.has_edge(e.dst, e.src)) {
      fail(Errc::not_simple_graph,
           "edge (" + std::to_string(e.src) + ", " + std::to_string(e.dst) +
               ") lacks its reciprocal");
    }
  }

  const NodeId n = g.node_count();
  std::vector<std::vector<MatrixEntry>> columns(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    auto nbrs = neighbors(g, v, Direction::out);  // == N(v) once reciprocated
    auto deg = static_cast<double>(nbrs.size());
    auto& col = columns[static_cast<std::size_t>(v)];
    if (variant == LaplacianVariant::combinatorial) {
      for (NodeId u : nbrs) col.push_back({u, -1.0});
      col.push_back({v, deg});
    } else {
      for (NodeId u : nbrs) col.push_back({u, -1.0 / deg});
      col.push_back({v, nbrs.empty() ? 0.0 : 1.0});
    }
  }
  Kind kind = variant == LaplacianVariant::combinatorial ? Kind::a3 : Kind::a4;
  return AdvectionMatrix::from_columns(kind, n, std::move(columns));
}

}  // namespace gradv
