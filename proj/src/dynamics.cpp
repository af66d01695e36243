#include "gradv/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "gradv/format.hpp"

namespace gradv {

namespace {

constexpr double kMaxSeriesArg = 20.0;  // cap on ||alpha*I - A||_1 * dt

void check_state(const AdvectionMatrix& m, const StateVector& f) {
  if (static_cast<NodeId>(f.size()) != m.size()) {
    fail(Errc::dimension_mismatch,
         "state has " + std::to_string(f.size()) + " entries, matrix is " +
             std::to_string(m.size()));
  }
  for (double x : f) {
    if (!std::isfinite(x)) fail(Errc::non_finite_input, "state entry");
  }
}

// y = (alpha*I - A) x by column scatter; fixed order keeps results
// deterministic.
void shifted_apply(const AdvectionMatrix& m, double alpha,
                   const StateVector& x, StateVector& y) {
  const NodeId n = m.size();
  for (NodeId u = 0; u < n; ++u) {
    y[static_cast<std::size_t>(u)] = alpha * x[static_cast<std::size_t>(u)];
  }
  for (NodeId v = 0; v < n; ++v) {
    double xv = x[static_cast<std::size_t>(v)];
    if (xv == 0.0) continue;
    for (const MatrixEntry& e : m.column(v)) {
      y[static_cast<std::size_t>(e.index)] -= e.value * xv;
    }
  }
}

// Smallest K with e^{-alpha_dt} * sum_{k>K} lam^k/k! <= eps, bounded via
// the geometric majorant of the tail so that targets far below machine
// epsilon relative to e^lam stay resolvable.
int series_length(double lam, double alpha_dt, double eps) {
  if (lam <= 0.0) return 0;
  double log_eps = std::log(std::max(eps, 1e-300));
  int k = static_cast<int>(std::ceil(lam));
  for (; k < 100000; ++k) {
    double ratio = lam / (k + 2);
    if (ratio >= 1.0) continue;
    double log_tail = (k + 1) * std::log(lam) - std::lgamma(k + 2.0) -
                      std::log1p(-ratio) - alpha_dt;
    if (log_tail <= log_eps) return k;
  }
  return 100000;
}

}  // namespace

StateVector evolve(const AdvectionMatrix& m, const StateVector& f0, double t,
                   double tol, EvolveStats* stats) {
  check_state(m, f0);
  if (!std::isfinite(t) || t < 0.0) {
    fail(Errc::non_finite_input, "time " + std::to_string(t));
  }
  if (tol <= 0.0) fail(Errc::bad_params, "tolerance must be positive");
  if (t == 0.0) return f0;

  const NodeId n = m.size();
  double alpha = 0.0;
  for (double d : m.diagonal()) alpha = std::max(alpha, d);
  bool zero_matrix = true;
  for (NodeId v = 0; v < n && zero_matrix; ++v) {
    for (const MatrixEntry& e : m.column(v)) {
      if (e.value != 0.0) zero_matrix = false;
    }
  }
  if (zero_matrix) return f0;
  if (alpha == 0.0) alpha = 1.0;

  // nu = ||alpha*I - A||_1; equals alpha exactly for operators with
  // nonpositive off-diagonals and zero column sums.
  double nu = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    double sum = std::abs(alpha - m.diagonal(v));
    for (const MatrixEntry& e : m.column(v)) {
      if (e.index != v) sum += std::abs(e.value);
    }
    nu = std::max(nu, sum);
  }
  if (nu == 0.0) nu = alpha;

  double step_estimate = std::ceil(t * nu / kMaxSeriesArg);
  if (!(step_estimate < 1e8)) {
    fail(Errc::bad_params,
         "horizon t=" + std::to_string(t) + " needs " +
             std::to_string(step_estimate) + " uniformization steps");
  }
  long steps = std::max<long>(1, static_cast<long>(step_estimate));
  double dt = t / static_cast<double>(steps);
  double lam = dt * nu;
  double decay = std::exp(-alpha * dt);

  StateVector f = f0;
  StateVector term(f.size());
  StateVector acc(f.size());
  StateVector next(f.size());

  for (long step = 0; step < steps; ++step) {
    double f_norm = l1_norm(f);
    if (f_norm == 0.0) break;
    double eps_step = tol * dt / t / f_norm;
    int terms = series_length(lam, alpha * dt, eps_step);

    term = f;
    acc = f;
    for (int k = 1; k <= terms; ++k) {
      shifted_apply(m, alpha, term, next);
      double scale = dt / static_cast<double>(k);
      for (std::size_t i = 0; i < term.size(); ++i) {
        term[i] = next[i] * scale;
        acc[i] += term[i];
      }
    }
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = decay * acc[i];

    if (stats) {
      stats->matvecs += terms;
      stats->max_terms = std::max(stats->max_terms, terms);
    }
  }
  if (stats) stats->steps += steps;
  return f;
}

Trajectory trajectory(const AdvectionMatrix& m, const StateVector& f0,
                      std::vector<double> times, double tol) {
  check_state(m, f0);
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || times[i] < 0.0) {
      fail(Errc::bad_params, "times must be finite and nonnegative");
    }
    if (i > 0 && times[i] <= times[i - 1]) {
      fail(Errc::bad_params, "times must be strictly ascending");
    }
  }

  Trajectory traj;
  traj.kind = m.kind();
  traj.tol = tol;
  traj.times = std::move(times);
  traj.states.reserve(traj.times.size());

  double horizon = traj.times.empty() ? 0.0 : traj.times.back();
  StateVector f = f0;
  double prev = 0.0;
  for (double ti : traj.times) {
    double leg = ti - prev;
    if (leg > 0.0) {
      double leg_tol = std::max(tol * leg / horizon,
                                std::numeric_limits<double>::min());
      f = evolve(m, f, leg, leg_tol, &traj.stats);
    }
    traj.states.push_back(f);
    prev = ti;
  }
  return traj;
}

double total_mass(const StateVector& f) {
  double sum = 0.0;
  for (double x : f) sum += x;
  return sum;
}

double l1_norm(const StateVector& f) {
  double sum = 0.0;
  for (double x : f) sum += std::abs(x);
  return sum;
}

double min_value(const StateVector& f) {
  double m = f.empty() ? 0.0 : f[0];
  for (double x : f) m = std::min(m, x);
  return m;
}

double average_displacement(const Potential& pot, NodeId v,
                            const StateVector& f) {
  if (static_cast<NodeId>(f.size()) != pot.node_count()) {
    fail(Errc::dimension_mismatch, "state does not match potential");
  }
  if (v < 0 || v >= pot.node_count()) {
    fail(Errc::index_out_of_range, "origin node");
  }
  double origin = pot.phi(v);
  double acc = 0.0;
  for (NodeId u = 0; u < pot.node_count(); ++u) {
    double fu = f[static_cast<std::size_t>(u)];
    if (fu == 0.0) continue;
    if (pot.component(u) != pot.component(v)) {
      fail(Errc::different_components,
           "mass at node " + std::to_string(u) +
               " outside the origin's component");
    }
    acc += (pot.phi(u) - origin) * fu;
  }
  return acc;
}

double cone_mass(const Graph& g, const StateVector& f, NodeId u) {
  if (static_cast<NodeId>(f.size()) != g.node_count()) {
    fail(Errc::dimension_mismatch, "state does not match graph");
  }
  const NodeId seeds[1] = {u};
  double sum = 0.0;
  for (NodeId w : successor_cone(g, seeds)) {
    sum += f[static_cast<std::size_t>(w)];
  }
  return sum;
}

FlowCheck flow_residual(const Graph& g, const AdvectionMatrix& m,
                        const StateVector& f0, NodeId u, double t,
                        int quad_steps, double tol) {
  check_state(m, f0);
  g.check_node(u);
  if (quad_steps < 1) fail(Errc::bad_params, "quad_steps must be >= 1");
  if (!std::isfinite(t) || t < 0.0) fail(Errc::non_finite_input, "time");

  FlowCheck result;
  result.tree_ok = classify(g).is_oriented_tree;

  const NodeId seeds[1] = {u};
  std::vector<char> pred(static_cast<std::size_t>(g.node_count()), 0);
  for (NodeId w : predecessor_cone(g, seeds)) {
    pred[static_cast<std::size_t>(w)] = 1;
  }
  for (NodeId w = 0; w < g.node_count(); ++w) {
    double fw = f0[static_cast<std::size_t>(w)];
    if (fw < 0.0 || (fw != 0.0 && !pred[static_cast<std::size_t>(w)])) {
      result.support_ok = false;
    }
  }

  // Composite Simpson needs samples at the panel endpoints and midpoints.
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(2 * quad_steps) + 1);
  if (t > 0.0) {
    std::vector<double> times;
    for (int j = 1; j <= 2 * quad_steps; ++j) {
      times.push_back(t * static_cast<double>(j) /
                      static_cast<double>(2 * quad_steps));
    }
    Trajectory traj = trajectory(m, f0, std::move(times), tol);
    samples.push_back(f0[static_cast<std::size_t>(u)]);
    for (const StateVector& s : traj.states) {
      samples.push_back(s[static_cast<std::size_t>(u)]);
    }

    double h = t / static_cast<double>(quad_steps);
    double integral = 0.0;
    for (int p = 0; p < quad_steps; ++p) {
      integral += (h / 6.0) * (samples[static_cast<std::size_t>(2 * p)] +
                               4.0 * samples[static_cast<std::size_t>(2 * p + 1)] +
                               samples[static_cast<std::size_t>(2 * p + 2)]);
    }
    result.integral_side = m.diagonal(u) * integral;

    const StateVector& ft = traj.states.back();
    result.cone_side = cone_mass(g, ft, u) - ft[static_cast<std::size_t>(u)];
  } else {
    result.integral_side = 0.0;
    result.cone_side = cone_mass(g, f0, u) - f0[static_cast<std::size_t>(u)];
  }
  result.residual = std::abs(result.integral_side - result.cone_side);
  return result;
}

void write_trajectory_csv(const Trajectory& traj, const Graph& g,
                          std::ostream& os) {
  os << "time,node,value\n";
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
      os << format_double(traj.times[i]) << ',' << g.label(u) << ','
         << format_double(traj.states[i][static_cast<std::size_t>(u)]) << "\n";
    }
  }
}

}  // namespace gradv
