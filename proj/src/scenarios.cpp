#include "gradv/scenarios.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <string>

namespace gradv {

Graph gen_two_cycles(int p, int q) {
  if (p < 2 || q < 2) fail(Errc::bad_params, "cycle lengths must be >= 2");
  std::vector<Edge> edges;
  // Left cycle 0 -> 1 -> ... -> p-1 -> 0, right cycle through p..p+q-2.
  double left = 1.0 / static_cast<double>(p);
  for (int i = 0; i < p; ++i) {
    edges.push_back({i, i + 1 == p ? 0 : i + 1, left});
  }
  double right = 1.0 / static_cast<double>(q);
  for (int i = 0; i < q; ++i) {
    NodeId a = i == 0 ? 0 : p - 1 + i;
    NodeId b = i + 1 == q ? 0 : p + i;
    edges.push_back({a, b, right});
  }
  return Graph::from_edges(std::move(edges), p + q - 1);
}

GridScenario gen_grid(int nx, int ny, double dx, double dy) {
  if (nx < 1 || ny < 1) fail(Errc::bad_params, "grid needs nx, ny >= 1");
  if (dx <= 0.0 || dy <= 0.0) fail(Errc::bad_params, "cell sides must be positive");

  GridScenario s;
  s.nx = nx;
  s.ny = ny;
  s.dx = dx;
  s.dy = dy;
  auto id = [nx](int i, int j) { return static_cast<NodeId>(j * nx + i); };

  std::vector<Edge> edges;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      if (i + 1 < nx) edges.push_back({id(i, j), id(i + 1, j), dx});
      if (j + 1 < ny) edges.push_back({id(i, j), id(i, j + 1), dy});
    }
  }
  s.graph = Graph::from_edges(std::move(edges),
                              static_cast<NodeId>(nx) * static_cast<NodeId>(ny));
  s.coords.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      s.coords.emplace_back(i * dx, j * dy);
    }
  }
  return s;
}

Graph gen_half_line(int n) {
  if (n < 3) fail(Errc::bad_params, "half-line truncation needs n >= 3");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.push_back({u, u + 1, 1.0});
  for (int u = 0; u + 2 <= n; ++u) edges.push_back({u, u + 2, 2.0});
  return Graph::from_edges(std::move(edges), n + 1);
}

Graph gen_branching_tree(std::vector<double> root_distances,
                         std::vector<double> depth_distances) {
  if (root_distances.empty()) {
    fail(Errc::bad_params, "tree needs at least one branch");
  }
  for (double d : root_distances) {
    if (d <= 0.0) fail(Errc::bad_params, "distances must be positive");
  }
  for (double d : depth_distances) {
    if (d <= 0.0) fail(Errc::bad_params, "distances must be positive");
  }

  std::vector<Edge> edges;
  NodeId next = 1;
  for (double root_d : root_distances) {
    NodeId head = next++;
    edges.push_back({0, head, root_d});
    NodeId prev = head;
    for (double d : depth_distances) {
      NodeId node = next++;
      edges.push_back({prev, node, d});
      prev = node;
    }
  }
  return Graph::from_edges(std::move(edges), next);
}

Graph gen_two_leaf_tree(double d_w, double d_u) {
  return gen_branching_tree({d_w, d_u}, {});
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shortest-path distance from every node to the target. Directed metric:
// relax backwards along real edges; undirected metric: both ways.
std::vector<double> distances_to(const Graph& g, NodeId target,
                                 bool undirected) {
  std::vector<double> dist(static_cast<std::size_t>(g.node_count()), kInf);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(target)] = 0.0;
  heap.emplace(0.0, target);
  while (!heap.empty()) {
    auto [d, y] = heap.top();
    heap.pop();
    if (d > dist[static_cast<std::size_t>(y)]) continue;
    auto relax = [&](NodeId x, double len) {
      double cand = d + len;
      if (cand < dist[static_cast<std::size_t>(x)]) {
        dist[static_cast<std::size_t>(x)] = cand;
        heap.emplace(cand, x);
      }
    };
    for (std::uint32_t e : g.in_edges(y)) relax(g.edge(e).src, g.edge(e).length);
    if (undirected) {
      for (std::uint32_t e : g.out_edges(y)) relax(g.edge(e).dst, g.edge(e).length);
    }
  }
  return dist;
}

}  // namespace

OrientationResult two_target_orient(const Graph& g,
                                    const OrientationSpec& spec) {
  if (spec.targets.empty()) fail(Errc::bad_params, "no targets given");
  std::set<NodeId> unique(spec.targets.begin(), spec.targets.end());
  if (unique.size() != spec.targets.size()) {
    fail(Errc::bad_params, "targets must be distinct");
  }
  for (NodeId t : spec.targets) g.check_node(t);

  // Every node must reach some target through the underlying undirected
  // graph, otherwise its edges cannot be oriented meaningfully.
  {
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
    std::queue<NodeId> queue;
    for (NodeId t : spec.targets) {
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = 1;
        queue.push(t);
      }
    }
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop();
      for (NodeId y : neighbors(g, x, Direction::both)) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          queue.push(y);
        }
      }
    }
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (!seen[static_cast<std::size_t>(u)]) {
        fail(Errc::target_unreachable,
             "node " + g.label(u) + " cannot reach any target");
      }
    }
  }

  OrientationResult result;
  for (NodeId t : spec.targets) {
    result.distances.push_back(distances_to(g, t, spec.undirected_metric));
  }

  std::vector<char> keep(g.edge_count(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (!g.has_edge(e.dst, e.src)) {
      keep[i] = 1;  // one-way edges always survive
      continue;
    }
    // Bidirectional pair: keep src->dst when dst is not farther from some
    // target than src (strictly nearer orients it, ties keep both).
    for (const auto& dist : result.distances) {
      if (dist[static_cast<std::size_t>(e.dst)] <=
          dist[static_cast<std::size_t>(e.src)]) {
        keep[i] = 1;
        break;
      }
    }
  }
  if (spec.make_sinks) {
    std::set<NodeId> sinks(spec.targets.begin(), spec.targets.end());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      if (sinks.count(g.edge(i).src)) keep[i] = 0;
    }
  }

  std::vector<Edge> kept;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (keep[i]) kept.push_back(g.edge(i));
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (NodeId u = 0; u < g.node_count(); ++u) labels.push_back(g.label(u));
  }
  result.graph =
      Graph::from_edges(std::move(kept), g.node_count(), std::move(labels));
  return result;
}

}  // namespace gradv
