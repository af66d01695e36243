#include "gradv/potential.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace gradv {

double Potential::signed_distance(NodeId v, NodeId u) const {
  if (v < 0 || v >= node_count() || u < 0 || u >= node_count()) {
    fail(Errc::index_out_of_range, "node outside potential domain");
  }
  if (comp_[static_cast<std::size_t>(v)] != comp_[static_cast<std::size_t>(u)]) {
    fail(Errc::different_components,
         "nodes " + std::to_string(v) + " and " + std::to_string(u) +
             " lie in different components");
  }
  return phi_[static_cast<std::size_t>(u)] - phi_[static_cast<std::size_t>(v)];
}

Potential compute_potential(const Graph& g) {
  const NodeId n = g.node_count();
  Potential pot;
  pot.phi_.assign(static_cast<std::size_t>(n), 0.0);
  pot.comp_.assign(static_cast<std::size_t>(n), -1);

  // BFS over the underlying undirected structure. Scanning anchors in
  // ascending order puts each component's anchor at its minimum index.
  int component = 0;
  for (NodeId anchor = 0; anchor < n; ++anchor) {
    if (pot.comp_[static_cast<std::size_t>(anchor)] != -1) continue;
    pot.comp_[static_cast<std::size_t>(anchor)] = component;
    pot.phi_[static_cast<std::size_t>(anchor)] = 0.0;
    std::queue<NodeId> queue;
    queue.push(anchor);
    while (!queue.empty()) {
      NodeId x = queue.front();
      queue.pop();
      double px = pot.phi_[static_cast<std::size_t>(x)];
      for (std::uint32_t e : g.out_edges(x)) {
        NodeId y = g.edge(e).dst;
        if (pot.comp_[static_cast<std::size_t>(y)] == -1) {
          pot.comp_[static_cast<std::size_t>(y)] = component;
          pot.phi_[static_cast<std::size_t>(y)] = px + g.edge(e).length;
          queue.push(y);
        }
      }
      for (std::uint32_t e : g.in_edges(x)) {
        NodeId y = g.edge(e).src;
        if (pot.comp_[static_cast<std::size_t>(y)] == -1) {
          pot.comp_[static_cast<std::size_t>(y)] = component;
          pot.phi_[static_cast<std::size_t>(y)] = px - g.edge(e).length;
          queue.push(y);
        }
      }
    }
    ++component;
  }

  // Consistency sweep against each component's length scale.
  std::vector<double> scale(static_cast<std::size_t>(component), 1.0);
  for (const Edge& e : g.edges()) {
    auto c = static_cast<std::size_t>(pot.comp_[static_cast<std::size_t>(e.src)]);
    scale[c] = std::max(scale[c], e.length);
  }
  for (NodeId u = 0; u < n; ++u) {
    auto c = static_cast<std::size_t>(pot.comp_[static_cast<std::size_t>(u)]);
    scale[c] = std::max(scale[c], std::abs(pot.phi_[static_cast<std::size_t>(u)]));
  }
  for (const Edge& e : g.edges()) {
    double gap = pot.phi_[static_cast<std::size_t>(e.dst)] -
                 pot.phi_[static_cast<std::size_t>(e.src)] - e.length;
    auto c = static_cast<std::size_t>(pot.comp_[static_cast<std::size_t>(e.src)]);
    if (std::abs(gap) > kPotentialTol * scale[c]) {
      fail(Errc::no_potential,
           "edge (" + std::to_string(e.src) + ", " + std::to_string(e.dst) +
               ") violates potential consistency by " + std::to_string(gap));
    }
  }
  return pot;
}

}  // namespace gradv
