#pragma once

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "gradv/graph.hpp"
#include "gradv/operators.hpp"

namespace testutil {

using gradv::Edge;
using gradv::Graph;
using gradv::NodeId;

// The 4-node benchmark graph: a unit cycle 0->1->2->3->0 plus a chord
// 1->3 of length 2.
inline Graph benchmark_graph() {
  return Graph::from_edges(
      {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}, {1, 3, 2.0}});
}

struct Frac {
  long long num = 0;
  long long den = 1;
  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

using DenseFracMatrix = std::vector<std::vector<Frac>>;

// Reference matrices of the five operator kinds on benchmark_graph, row-major.
inline DenseFracMatrix benchmark_expected(gradv::Kind kind) {
  using K = gradv::Kind;
  switch (kind) {
    case K::a1:
      return {{{-1, 1}, {1, 1}, {0, 1}, {0, 1}},
              {{0, 1}, {-3, 2}, {1, 1}, {1, 2}},
              {{0, 1}, {0, 1}, {-1, 1}, {1, 1}},
              {{1, 1}, {0, 1}, {0, 1}, {-1, 1}}};
    case K::a2:
      return {{{1, 1}, {0, 1}, {0, 1}, {-1, 1}},
              {{-1, 1}, {1, 1}, {0, 1}, {0, 1}},
              {{0, 1}, {-1, 1}, {1, 1}, {0, 1}},
              {{0, 1}, {-1, 2}, {-1, 1}, {3, 2}}};
    case K::a3:
      return {{{1, 1}, {0, 1}, {0, 1}, {-1, 1}},
              {{-1, 1}, {3, 2}, {0, 1}, {0, 1}},
              {{0, 1}, {-1, 1}, {1, 1}, {0, 1}},
              {{0, 1}, {-1, 2}, {-1, 1}, {1, 1}}};
    case K::a4:
      return {{{1, 1}, {0, 1}, {0, 1}, {-1, 1}},
              {{-1, 1}, {3, 4}, {0, 1}, {0, 1}},
              {{0, 1}, {-1, 2}, {1, 1}, {0, 1}},
              {{0, 1}, {-1, 4}, {-1, 1}, {1, 1}}};
    case K::a5:
      return {{{1, 1}, {0, 1}, {0, 1}, {-1, 1}},
              {{-1, 1}, {2, 3}, {0, 1}, {0, 1}},
              {{0, 1}, {-1, 3}, {1, 1}, {0, 1}},
              {{0, 1}, {-1, 3}, {-1, 1}, {1, 1}}};
  }
  return {};
}

inline std::vector<std::vector<double>> dense_from(
    const gradv::AdvectionMatrix& m) {
  std::vector<std::vector<double>> dense(
      static_cast<std::size_t>(m.size()),
      std::vector<double>(static_cast<std::size_t>(m.size()), 0.0));
  for (NodeId v = 0; v < m.size(); ++v) {
    for (const gradv::MatrixEntry& e : m.column(v)) {
      dense[static_cast<std::size_t>(e.index)][static_cast<std::size_t>(v)] =
          e.value;
    }
  }
  return dense;
}

// Brute-force e^{-tA} f for small dense matrices: scaling and squaring on
// the plain Taylor series, no diagonalization. Independent of the
// uniformization path it cross-checks.
inline std::vector<double> dense_expm_apply(
    const std::vector<std::vector<double>>& a, double t,
    const std::vector<double>& f) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = -t * a[i][j];
      row += std::abs(m[i][j]);
    }
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  double scale = std::ldexp(1.0, -squarings);
  for (auto& row : m) {
    for (double& x : row) x *= scale;
  }

  auto matmul = [n](const std::vector<std::vector<double>>& x,
                    const std::vector<std::vector<double>>& y) {
    std::vector<std::vector<double>> z(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        double xik = x[i][k];
        if (xik == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) z[i][j] += xik * y[k][j];
      }
    }
    return z;
  };

  std::vector<std::vector<double>> result(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> term(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    result[i][i] = 1.0;
    term[i][i] = 1.0;
  }
  for (int k = 1; k <= 40; ++k) {
    term = matmul(term, m);
    double tnorm = 0.0;
    for (auto& row : term) {
      for (double& x : row) x /= static_cast<double>(k);
    }
    for (const auto& row : term) {
      double rsum = 0.0;
      for (double x : row) rsum += std::abs(x);
      tnorm = std::max(tnorm, rsum);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
    }
    if (tnorm < 1e-22) break;
  }
  for (int s = 0; s < squarings; ++s) result = matmul(result, result);

  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i] += result[i][j] * f[j];
  }
  return out;
}

// Loopless random digraph without duplicate arcs, lengths uniform in
// [min_len, max_len].
inline Graph random_digraph(std::mt19937& rng, int min_nodes, int max_nodes,
                            double min_len = 0.1, double max_len = 10.0) {
  std::uniform_int_distribution<int> node_dist(min_nodes, max_nodes);
  int n = node_dist(rng);
  long long max_arcs = static_cast<long long>(n) * (n - 1);
  std::uniform_int_distribution<long long> arc_dist(
      n, std::min<long long>(3 * n, max_arcs));
  long long target = arc_dist(rng);

  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_real_distribution<double> len(min_len, max_len);
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < 50 * target &&
                        static_cast<long long>(edges.size()) < target;
       ++attempt) {
    int u = pick(rng);
    int v = pick(rng);
    if (u == v || !seen.emplace(u, v).second) continue;
    edges.push_back({u, v, len(rng)});
  }
  return Graph::from_edges(std::move(edges), n);
}

// Random oriented tree: random parent links, each edge flipped with
// probability 1/2.
inline Graph random_oriented_tree(std::mt19937& rng, int min_nodes,
                                  int max_nodes, double min_len = 0.1,
                                  double max_len = 10.0) {
  std::uniform_int_distribution<int> node_dist(min_nodes, max_nodes);
  int n = node_dist(rng);
  std::uniform_real_distribution<double> len(min_len, max_len);
  std::bernoulli_distribution flip(0.5);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    int u = parent(rng);
    if (flip(rng)) {
      edges.push_back({u, v, len(rng)});
    } else {
      edges.push_back({v, u, len(rng)});
    }
  }
  return Graph::from_edges(std::move(edges), n);
}

// Simple graph encoded as reciprocal directed pairs with unit lengths.
inline Graph random_simple_graph(std::mt19937& rng, int min_nodes,
                                 int max_nodes) {
  std::uniform_int_distribution<int> node_dist(min_nodes, max_nodes);
  int n = node_dist(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  long long max_pairs = static_cast<long long>(n) * (n - 1) / 2;
  std::uniform_int_distribution<long long> pair_dist(
      1, std::min<long long>(2 * n, max_pairs));
  long long target = pair_dist(rng);

  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < 50 * target &&
                        static_cast<long long>(seen.size()) < target;
       ++attempt) {
    int u = pick(rng);
    int v = pick(rng);
    if (u == v) continue;
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) continue;
    edges.push_back({u, v, 1.0});
    edges.push_back({v, u, 1.0});
  }
  return Graph::from_edges(std::move(edges), n);
}

}  // namespace testutil
