#include "gradv/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <string>

#include "gradv/potential.hpp"

namespace gradv {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::self_loop: return "SelfLoop";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::non_positive_length: return "NonPositiveLength";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::no_potential: return "NoPotential";
    case Errc::different_components: return "DifferentComponents";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::non_finite_input: return "NonFiniteInput";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::unknown_node: return "UnknownNode";
    case Errc::target_unreachable: return "TargetUnreachable";
    case Errc::not_a_successor: return "NotASuccessor";
    case Errc::zero_diagonal: return "ZeroDiagonal";
    case Errc::not_simple_graph: return "NotSimpleGraph";
    case Errc::bad_params: return "BadParams";
  }
  return "UnknownError";
}

Graph Graph::from_edges(std::vector<Edge> edges,
                        std::optional<NodeId> node_count,
                        std::vector<std::string> labels) {
  Graph g;

  NodeId max_index = -1;
  for (const Edge& e : edges) {
    if (e.src < 0 || e.dst < 0) {
      fail(Errc::index_out_of_range, "negative node index");
    }
    max_index = std::max({max_index, e.src, e.dst});
  }
  g.n_ = node_count.value_or(max_index + 1);
  if (g.n_ < 0) fail(Errc::bad_params, "negative node count");
  if (max_index >= g.n_) {
    fail(Errc::index_out_of_range,
         "edge references node " + std::to_string(max_index) +
             " but node count is " + std::to_string(g.n_));
  }
  if (!labels.empty() && static_cast<NodeId>(labels.size()) != g.n_) {
    fail(Errc::bad_params, "label count does not match node count");
  }

  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : edges) {
    if (e.src == e.dst) {
      fail(Errc::self_loop, "node " + std::to_string(e.src));
    }
    if (!(e.length > 0.0) || !std::isfinite(e.length)) {
      fail(Errc::non_positive_length,
           "edge (" + std::to_string(e.src) + ", " + std::to_string(e.dst) +
               ") has length " + std::to_string(e.length));
    }
    if (!seen.emplace(e.src, e.dst).second) {
      fail(Errc::duplicate_edge,
           "(" + std::to_string(e.src) + ", " + std::to_string(e.dst) + ")");
    }
  }

  g.edges_ = std::move(edges);
  g.out_.assign(static_cast<std::size_t>(g.n_), {});
  g.in_.assign(static_cast<std::size_t>(g.n_), {});
  for (std::uint32_t i = 0; i < g.edges_.size(); ++i) {
    g.out_[static_cast<std::size_t>(g.edges_[i].src)].push_back(i);
    g.in_[static_cast<std::size_t>(g.edges_[i].dst)].push_back(i);
  }
  for (auto& v : g.out_) {
    std::sort(v.begin(), v.end(), [&](std::uint32_t a, std::uint32_t b) {
      return g.edges_[a].dst < g.edges_[b].dst;
    });
  }
  for (auto& v : g.in_) {
    std::sort(v.begin(), v.end(), [&](std::uint32_t a, std::uint32_t b) {
      return g.edges_[a].src < g.edges_[b].src;
    });
  }

  g.min_length_ = std::numeric_limits<double>::infinity();
  for (const Edge& e : g.edges_) g.min_length_ = std::min(g.min_length_, e.length);
  for (NodeId u = 0; u < g.n_; ++u) g.max_degree_ = std::max(g.max_degree_, g.degree(u));

  if (!labels.empty()) {
    g.labels_ = std::move(labels);
    for (NodeId u = 0; u < g.n_; ++u) {
      const std::string& label = g.labels_[static_cast<std::size_t>(u)];
      // Labels double as file tokens, so they must survive whitespace
      // splitting and comment stripping.
      if (label.empty() || label.find_first_of(" \t\r\n") != std::string::npos ||
          label[0] == '#') {
        fail(Errc::bad_params, "label '" + label + "' is not a valid token");
      }
      if (!g.label_index_.emplace(label, u).second) {
        fail(Errc::bad_params, "duplicate node label '" + label + "'");
      }
    }
  }
  return g;
}

void Graph::check_node(NodeId u) const {
  if (u < 0 || u >= n_) {
    fail(Errc::index_out_of_range,
         "node " + std::to_string(u) + " outside 0.." + std::to_string(n_ - 1));
  }
}

std::span<const std::uint32_t> Graph::out_edges(NodeId u) const {
  check_node(u);
  return out_[static_cast<std::size_t>(u)];
}

std::span<const std::uint32_t> Graph::in_edges(NodeId u) const {
  check_node(u);
  return in_[static_cast<std::size_t>(u)];
}

int Graph::out_degree(NodeId u) const {
  check_node(u);
  return static_cast<int>(out_[static_cast<std::size_t>(u)].size());
}

int Graph::in_degree(NodeId u) const {
  check_node(u);
  return static_cast<int>(in_[static_cast<std::size_t>(u)].size());
}

int Graph::degree(NodeId u) const { return out_degree(u) + in_degree(u); }

const Edge* Graph::find_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  const auto& adj = out_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [&](std::uint32_t e, NodeId dst) {
                               return edges_[e].dst < dst;
                             });
  if (it == adj.end() || edges_[*it].dst != v) return nullptr;
  return &edges_[*it];
}

std::string Graph::label(NodeId u) const {
  check_node(u);
  if (has_labels()) return labels_[static_cast<std::size_t>(u)];
  return std::to_string(u);
}

std::optional<NodeId> Graph::find_label(const std::string& token) const {
  auto it = label_index_.find(token);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<NodeId> neighbors(const Graph& g, NodeId u, Direction dir) {
  g.check_node(u);
  std::vector<NodeId> result;
  if (dir == Direction::out || dir == Direction::both) {
    for (std::uint32_t e : g.out_edges(u)) result.push_back(g.edge(e).dst);
  }
  if (dir == Direction::in || dir == Direction::both) {
    for (std::uint32_t e : g.in_edges(u)) result.push_back(g.edge(e).src);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<NodeId> iterated_neighborhood(const Graph& g, NodeId u, int k,
                                          Direction dir, bool closed) {
  g.check_node(u);
  if (k < 0) fail(Errc::bad_params, "negative neighborhood depth");

  // BFS layers; dist[v] = first layer containing v.
  std::vector<int> dist(static_cast<std::size_t>(g.node_count()), -1);
  std::queue<NodeId> queue;
  dist[static_cast<std::size_t>(u)] = 0;
  queue.push(u);
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop();
    int dx = dist[static_cast<std::size_t>(x)];
    if (dx >= k) continue;
    for (NodeId y : neighbors(g, x, dir)) {
      if (dist[static_cast<std::size_t>(y)] == -1) {
        dist[static_cast<std::size_t>(y)] = dx + 1;
        queue.push(y);
      }
    }
  }

  std::vector<NodeId> result;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    int dv = dist[static_cast<std::size_t>(v)];
    if (dv == -1) continue;
    if (closed ? (dv <= k) : (dv == k)) result.push_back(v);
  }
  if (!closed && k == 0) result = {u};
  return result;
}

namespace {

std::vector<NodeId> directed_cone(const Graph& g, std::span<const NodeId> seeds,
                                  bool forward) {
  std::vector<char> visited(static_cast<std::size_t>(g.node_count()), 0);
  std::queue<NodeId> queue;
  for (NodeId s : seeds) {
    g.check_node(s);
    if (!visited[static_cast<std::size_t>(s)]) {
      visited[static_cast<std::size_t>(s)] = 1;
      queue.push(s);
    }
  }
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop();
    auto adjacency = forward ? g.out_edges(x) : g.in_edges(x);
    for (std::uint32_t e : adjacency) {
      NodeId y = forward ? g.edge(e).dst : g.edge(e).src;
      if (!visited[static_cast<std::size_t>(y)]) {
        visited[static_cast<std::size_t>(y)] = 1;
        queue.push(y);
      }
    }
  }
  std::vector<NodeId> result;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (visited[static_cast<std::size_t>(v)]) result.push_back(v);
  }
  return result;
}

}  // namespace

std::vector<NodeId> successor_cone(const Graph& g,
                                   std::span<const NodeId> seeds) {
  return directed_cone(g, seeds, true);
}

std::vector<NodeId> predecessor_cone(const Graph& g,
                                     std::span<const NodeId> seeds) {
  return directed_cone(g, seeds, false);
}

GraphClassification classify(const Graph& g) {
  GraphClassification c;
  c.delta = g.min_length();
  c.max_degree = g.max_degree();

  c.is_oriented = true;
  for (const Edge& e : g.edges()) {
    if (g.has_edge(e.dst, e.src)) {
      c.is_oriented = false;
      break;
    }
  }

  const NodeId n = g.node_count();
  bool connected = true;
  if (n > 0) {
    std::vector<NodeId> seed = {0};
    connected = static_cast<NodeId>(
                    iterated_neighborhood(g, 0, std::max<int>(n, 1),
                                          Direction::both, true)
                        .size()) == n;
    (void)seed;
  }
  // Undirected acyclicity for an oriented graph: tree edge count.
  c.is_oriented_tree = n > 0 && c.is_oriented && connected &&
                       g.edge_count() == static_cast<std::size_t>(n) - 1;

  c.is_leafless = n > 0;
  for (NodeId u = 0; u < n; ++u) {
    if (g.out_degree(u) == 0) {
      c.is_leafless = false;
      break;
    }
  }

  try {
    compute_potential(g);
    c.has_potential = true;
  } catch (const Error&) {
    c.has_potential = false;
  }
  return c;
}

}  // namespace gradv
