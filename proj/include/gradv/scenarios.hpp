#pragma once

#include <utility>
#include <vector>

#include "gradv/graph.hpp"

namespace gradv {

// Deterministic generators for the benchmark graphs plus the two-target
// road orientation.

// Two directed cycles sharing node 0: p edges of length 1/p on the left,
// q edges of length 1/q on the right. Both cycles have total length 1.
Graph gen_two_cycles(int p, int q);

struct GridScenario {
  Graph graph;
  std::vector<std::pair<double, double>> coords;  // embedded (x, y) per node
  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0;
};

// Oriented rectangular grid: nx * ny nodes at (i*dx, j*dy), node index
// j*nx + i, edges rightwards (length dx) and upwards (length dy). The top
// and right boundaries are natural leaves.
GridScenario gen_grid(int nx, int ny, double dx, double dy);

// Half-line 0..n with unit steps (u, u+1) and length-2 shortcuts
// (u, u+2). Admits the potential phi(u) = u.
Graph gen_half_line(int n);

// Star of chains: the root (node 0) starts one chain per entry of
// root_distances; every chain then continues with the shared
// depth_distances. Chain k occupies nodes 1 + k*(1+depth) onwards.
// Defaults reproduce the three-branch benchmark tree.
Graph gen_branching_tree(
    std::vector<double> root_distances = {1.0, 0.5, 1.0 / 3.0},
    std::vector<double> depth_distances = {0.5, 0.25});

// Root 0 with two leaf children: w = node 1 at distance d_w, u = node 2
// at distance d_u.
Graph gen_two_leaf_tree(double d_w = 1.0, double d_u = 2.0);

struct OrientationSpec {
  std::vector<NodeId> targets;  // distinct, valid
  bool make_sinks = true;       // strip the targets' outgoing edges
  // Distance metric for "closer to the target": false follows real edge
  // directions (bidirectional pairs are traversable both ways because both
  // edges exist); true treats even one-way edges as traversable both ways.
  bool undirected_metric = false;
};

struct OrientationResult {
  Graph graph;
  // dist[t][u]: shortest-path distance from u to targets[t] under the
  // chosen metric (infinity when unreachable).
  std::vector<std::vector<double>> distances;
};

// Orients every bidirectional edge pair toward the endpoint nearer each
// target and unions the per-target edge sets; one-way edges are always
// kept. Equidistant endpoints keep both directions, so every input edge
// stays traversable before sink removal. Throws target_unreachable when
// some node cannot reach any target through the underlying undirected
// graph.
OrientationResult two_target_orient(const Graph& g,
                                    const OrientationSpec& spec);

}  // namespace gradv
