#pragma once

#include <vector>

#include "gradv/graph.hpp"

namespace gradv {

/**
 * Node potential phi with phi(u) - phi(v) equal to the length of every
 * edge (v,u). Anchored at zero on the minimum-index node of each weakly
 * connected component; only differences are meaningful.
 */
class Potential {
public:
  double phi(NodeId u) const { return phi_[static_cast<std::size_t>(u)]; }
  int component(NodeId u) const { return comp_[static_cast<std::size_t>(u)]; }
  NodeId node_count() const { return static_cast<NodeId>(phi_.size()); }

  // Signed distance d_vu = phi(u) - phi(v). Antisymmetric; equals the edge
  // length whenever (v,u) is an edge. Throws different_components.
  double signed_distance(NodeId v, NodeId u) const;

private:
  friend Potential compute_potential(const Graph& g);
  std::vector<double> phi_;
  std::vector<int> comp_;
};

// BFS assignment over the underlying undirected structure followed by a
// full consistency sweep; throws no_potential when some edge violates
// phi(dst) - phi(src) = length beyond 1e-12 relative to the component's
// length scale (any directed cycle of positive total length does).
Potential compute_potential(const Graph& g);

inline constexpr double kPotentialTol = 1e-12;

}  // namespace gradv
