#pragma once

#include <utility>

#include "gradv/graph.hpp"
#include "gradv/operators.hpp"

namespace gradv {

// Closed-form reference solutions used as independent oracles for the
// operator and dynamics code.

/**
 * Coefficients of the two-node cascade v -> u: diagonal rates a_vv, a_uu
 * and the transfer coefficient a_uv <= 0.
 */
struct CascadeParams {
  double a_vv = 0.0;
  double a_uu = 0.0;
  double a_uv = 0.0;
};

// Mass at u at time t for a unit mass started at v:
//   a_uv/(a_vv - a_uu) * (e^{-t a_vv} - e^{-t a_uu}),
// degenerating to -a_uv * t * e^{-t a_vv} when the rates coincide
// (relative gap below 1e-12).
double cascade_mass(const CascadeParams& p, double t);

// Mass at grid offset (nx, ny) from the source at time t: the product of
// two Poisson weights with means t*alpha_x and t*alpha_y. Log-space
// evaluation beyond n = 30.
double grid_mass(double alpha_x, double alpha_y, long nx, long ny, double t);

// Center of mass (t*dx*alpha_x, t*dy*alpha_y) in embedded coordinates.
std::pair<double, double> grid_mean(double alpha_x, double alpha_y, double dx,
                                    double dy, double t);

// Per-kind rate pair (alpha_x, alpha_y) of an interior node of the
// rectangular grid with cell (dx, dy). Only the mass-conserving kinds
// A3/A4/A5 admit the product form; others throw bad_params.
std::pair<double, double> grid_alphas(Kind kind, double dx, double dy);

// Limit mass of the branch through successor u for a unit mass started at
// v: -a_uv / a_vv. Throws not_a_successor / zero_diagonal.
double limit_cone_mass(const AdvectionMatrix& m, NodeId v, NodeId u);

enum class LaplacianVariant { combinatorial, right_normalized };

// Reference Laplacians of a simple graph encoded as reciprocal directed
// pairs with unit lengths, built directly from neighbor sets:
// combinatorial deg(u) - adjacency, right-normalized I - adjacency/deg.
// Throws not_simple_graph.
AdvectionMatrix laplacian_reference(const Graph& g, LaplacianVariant variant);

}  // namespace gradv
