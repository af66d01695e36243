#pragma once

#include <iosfwd>
#include <vector>

#include "gradv/graph.hpp"
#include "gradv/operators.hpp"
#include "gradv/potential.hpp"

namespace gradv {

inline constexpr double kDefaultEvolveTol = 1e-10;

struct EvolveStats {
  long steps = 0;     // uniformization time steps
  long matvecs = 0;   // shifted matrix-vector products
  int max_terms = 0;  // longest series used on a single step
};

/**
 * f_t = e^{-tA} f0 by uniformization: shift to N = alpha*I - A (entrywise
 * nonnegative whenever the off-diagonals of A are nonpositive), split t
 * into steps with a capped series argument and sum the scaled Taylor terms
 * of e^{dt N}, truncated where the Poisson tail bound drops below the
 * error budget. All terms are nonnegative for nonnegative f0 under the
 * mass-transfer sign structure, so positivity holds by construction.
 * Error budget tol is on the l1 norm over the whole horizon.
 */
StateVector evolve(const AdvectionMatrix& m, const StateVector& f0, double t,
                   double tol = kDefaultEvolveTol,
                   EvolveStats* stats = nullptr);

struct Trajectory {
  std::vector<double> times;         // strictly ascending, >= 0
  std::vector<StateVector> states;   // states[i] at times[i]
  Kind kind = Kind::a4;
  double tol = kDefaultEvolveTol;
  EvolveStats stats;
};

// Samples the evolution at the given times, restarting from the previous
// state between consecutive times. The tol budget is split across legs in
// proportion to their duration.
Trajectory trajectory(const AdvectionMatrix& m, const StateVector& f0,
                      std::vector<double> times,
                      double tol = kDefaultEvolveTol);

double total_mass(const StateVector& f);  // plain sum
double l1_norm(const StateVector& f);
double min_value(const StateVector& f);

// Average displacement sum_u (phi(u) - phi(v)) f(u) of a distribution
// from origin v. Throws different_components when f has weight outside
// the origin's component.
double average_displacement(const Potential& pot, NodeId v,
                            const StateVector& f);

// Mass inside the cone of successors of u, u included.
double cone_mass(const Graph& g, const StateVector& f, NodeId u);

/**
 * Residual of the flow-through-a-node identity
 *   a_uu * integral_0^t f_s(u) ds = mass at time t strictly below u,
 * with the integral by composite Simpson on quad_steps uniform panels.
 * The identity is exact for mass-conserving forward operators on oriented
 * trees with f0 supported on the predecessors of u; the flags report
 * whether those hypotheses held.
 */
struct FlowCheck {
  double residual = 0.0;
  double integral_side = 0.0;  // a_uu * quadrature
  double cone_side = 0.0;      // cone mass at t minus f_t(u)
  bool tree_ok = true;
  bool support_ok = true;
};

FlowCheck flow_residual(const Graph& g, const AdvectionMatrix& m,
                        const StateVector& f0, NodeId u, double t,
                        int quad_steps = 256,
                        double tol = kDefaultEvolveTol);

// CSV long format: header "time,node,value", one row per (time, node),
// 17 significant digits; node column uses labels when present.
void write_trajectory_csv(const Trajectory& traj, const Graph& g,
                          std::ostream& os);

}  // namespace gradv
