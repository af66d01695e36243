#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gradv/errors.hpp"

namespace gradv {

using NodeId = std::int32_t;

struct Edge {
  NodeId src;
  NodeId dst;
  double length;
};

enum class Direction { out, in, both };

/**
 * Finite directed graph with positive edge lengths and dual adjacency.
 *
 * Nodes are dense indices 0..n-1, optionally carrying string labels.
 * Construction rejects self-loops, duplicate (src,dst) pairs and
 * non-positive lengths; afterwards the graph is immutable and safe to
 * share across threads.
 */
class Graph {
public:
  Graph() = default;

  // node_count: pad/validate against an explicit node count. Without it the
  // count is 1 + max index appearing in the edge list (0 for an empty list).
  static Graph from_edges(std::vector<Edge> edges,
                          std::optional<NodeId> node_count = std::nullopt,
                          std::vector<std::string> labels = {});

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  // Edge indices leaving/entering u, sorted by the far endpoint.
  std::span<const std::uint32_t> out_edges(NodeId u) const;
  std::span<const std::uint32_t> in_edges(NodeId u) const;

  int out_degree(NodeId u) const;
  int in_degree(NodeId u) const;
  int degree(NodeId u) const;

  bool has_edge(NodeId u, NodeId v) const { return find_edge(u, v) != nullptr; }
  const Edge* find_edge(NodeId u, NodeId v) const;

  // delta_G: minimum edge length, +infinity for an edgeless graph.
  double min_length() const { return min_length_; }
  // Delta_G: maximum total degree.
  int max_degree() const { return max_degree_; }

  bool has_labels() const { return !labels_.empty(); }
  // Printable node token: the label when present, the decimal index otherwise.
  std::string label(NodeId u) const;
  std::optional<NodeId> find_label(const std::string& token) const;

  void check_node(NodeId u) const;

private:
  NodeId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
  double min_length_ = 0.0;
  int max_degree_ = 0;
};

struct GraphClassification {
  bool is_oriented = false;       // no reciprocal edge pair
  bool is_oriented_tree = false;  // oriented + undirected-connected + acyclic
  bool is_leafless = false;       // every node has at least one successor
  bool has_potential = false;
  double delta = 0.0;             // min edge length
  int max_degree = 0;
};

// N+(u), N-(u) or N(u): sorted, duplicate-free.
std::vector<NodeId> neighbors(const Graph& g, NodeId u, Direction dir);

// k-iterated neighborhood N_k[u]; with closed=false the ring
// N_k(u) = N_k[u] \ N_{k-1}[u]. k = 0 gives {u} in both modes.
std::vector<NodeId> iterated_neighborhood(const Graph& g, NodeId u, int k,
                                          Direction dir, bool closed);

// Cone of successors N+inf[seeds]: everything reachable along directed
// walks, seeds included. BFS.
std::vector<NodeId> successor_cone(const Graph& g,
                                   std::span<const NodeId> seeds);

// Cone of predecessors N-inf[seeds].
std::vector<NodeId> predecessor_cone(const Graph& g,
                                     std::span<const NodeId> seeds);

GraphClassification classify(const Graph& g);

}  // namespace gradv
