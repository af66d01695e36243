#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gradv/axioms.hpp"
#include "gradv/dynamics.hpp"
#include "gradv/edgelist_io.hpp"
#include "gradv/format.hpp"
#include "gradv/oracles.hpp"
#include "gradv/operators.hpp"
#include "gradv/potential.hpp"
#include "gradv/scenarios.hpp"

namespace {

using namespace gradv;

// Exit codes: 0 success / all axioms pass, 1 axiom failure, 2 usage error,
// 3 I/O or parse error.
constexpr int kExitOk = 0;
constexpr int kExitAxiomFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
  std::string graph_path;
  std::string output;
  std::string kind_name = "A4";
  double tol = kDefaultEvolveTol;
  bool quiet = false;
};

std::vector<double> parse_ascending_times(const std::string& csv) {
  std::vector<double> times;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      times.push_back(std::stod(item));
    } catch (const std::exception&) {
      fail(Errc::bad_params, "bad time value '" + item + "'");
    }
  }
  if (times.empty()) fail(Errc::bad_params, "empty time list");
  return times;
}

std::vector<double> parse_distance_list(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      fail(Errc::bad_params, "bad distance value '" + item + "'");
    }
  }
  return values;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) fail(Errc::io_error, "cannot open '" + path + "' for writing");
  return os;
}

StateVector initial_condition(const Graph& g, const std::string& mass_at,
                              const std::string& mass_file) {
  if (!mass_at.empty() && !mass_file.empty()) {
    fail(Errc::bad_params, "--mass-at and --mass-file are exclusive");
  }
  if (!mass_at.empty()) {
    StateVector f(static_cast<std::size_t>(g.node_count()), 0.0);
    f[static_cast<std::size_t>(resolve_node(g, mass_at))] = 1.0;
    return f;
  }
  if (!mass_file.empty()) {
    std::ifstream is(mass_file);
    if (!is) fail(Errc::io_error, "cannot open '" + mass_file + "'");
    return read_mass_file(g, is);
  }
  fail(Errc::bad_params, "need --mass-at or --mass-file");
}

int run_gen(const std::string& scenario, const Options& opt, int p, int q,
            int nx, int ny, double dx, double dy, int n,
            const std::string& root_csv, const std::string& depth_csv,
            double dw, double du) {
  Graph graph;
  std::vector<std::pair<double, double>> coords;
  if (scenario == "two-cycles") {
    graph = gen_two_cycles(p, q);
  } else if (scenario == "grid") {
    GridScenario s = gen_grid(nx, ny, dx, dy);
    graph = std::move(s.graph);
    coords = std::move(s.coords);
  } else if (scenario == "half-line") {
    graph = gen_half_line(n);
  } else if (scenario == "tree") {
    auto roots = root_csv.empty() ? std::vector<double>{1.0, 0.5, 1.0 / 3.0}
                                  : parse_distance_list(root_csv);
    auto depths = depth_csv.empty() ? std::vector<double>{0.5, 0.25}
                                    : parse_distance_list(depth_csv);
    graph = gen_branching_tree(roots, depths);
  } else if (scenario == "two-leaf") {
    graph = gen_two_leaf_tree(dw, du);
  } else {
    fail(Errc::bad_params, "unknown scenario '" + scenario + "'");
  }

  if (opt.output.empty()) {
    write_edge_list(graph, std::cout);
    if (!coords.empty() && !opt.quiet) {
      std::cerr << "note: coordinate sidecar needs --output\n";
    }
  } else {
    auto os = open_output(opt.output);
    write_edge_list(graph, os);
    if (!coords.empty()) {
      auto cs = open_output(opt.output + ".coords");
      write_coordinates(graph, coords, cs);
    }
  }
  if (!opt.quiet) {
    std::ostream& info = opt.output.empty() ? std::cerr : std::cout;
    info << scenario << ": " << graph.node_count() << " nodes, "
         << graph.edge_count() << " edges";
    if (!opt.output.empty()) info << " -> " << opt.output;
    info << "\n";
  }
  return kExitOk;
}

int run_check(const Options& opt, const std::string& matrix_out) {
  Graph g = read_edge_list_file(opt.graph_path);
  AdvectionMatrix m = build_operator(g, kind_from_string(opt.kind_name));
  AxiomReport report = check_axioms(m, g, opt.tol);
  if (!opt.quiet) write_report_table(report, std::cout);
  if (!opt.output.empty()) {
    auto os = open_output(opt.output);
    write_report_kv(report, os);
  }
  if (!matrix_out.empty()) {
    auto os = open_output(matrix_out);
    write_matrix_coo(m, os);
  }
  return report.all_applicable_pass() ? kExitOk : kExitAxiomFail;
}

int run_simulate(const Options& opt, const std::string& mass_at,
                 const std::string& mass_file, const std::string& times_csv) {
  Graph g = read_edge_list_file(opt.graph_path);
  AdvectionMatrix m = build_operator(g, kind_from_string(opt.kind_name));
  StateVector f0 = initial_condition(g, mass_at, mass_file);
  if (min_value(f0) < 0.0) {
    fail(Errc::bad_params, "initial condition must be nonnegative");
  }
  std::vector<double> times = parse_ascending_times(times_csv);

  Trajectory traj = trajectory(m, f0, times, opt.tol);
  if (opt.output.empty()) {
    write_trajectory_csv(traj, g, std::cout);
  } else {
    auto os = open_output(opt.output);
    write_trajectory_csv(traj, g, os);
  }
  if (!opt.quiet) {
    const StateVector& last = traj.states.back();
    std::ostream& info = opt.output.empty() ? std::cerr : std::cout;
    info << "mass drift " << format_double(total_mass(last) - total_mass(f0))
         << ", min entry " << format_double(min_value(last)) << "\n";
  }
  return kExitOk;
}

int run_orient(const Options& opt, const std::vector<std::string>& targets,
               bool no_sinks, bool undirected) {
  Graph g = read_edge_list_file(opt.graph_path);
  OrientationSpec spec;
  for (const std::string& token : targets) {
    spec.targets.push_back(resolve_node(g, token));
  }
  spec.make_sinks = !no_sinks;
  spec.undirected_metric = undirected;
  OrientationResult result = two_target_orient(g, spec);

  if (opt.output.empty()) {
    write_edge_list(result.graph, std::cout);
  } else {
    auto os = open_output(opt.output);
    write_edge_list(result.graph, os);
  }
  if (!opt.quiet) {
    std::ostream& info = opt.output.empty() ? std::cerr : std::cout;
    for (std::size_t i = 0; i < spec.targets.size(); ++i) {
      double worst = 0.0;
      long reachable = 0;
      for (double d : result.distances[i]) {
        if (std::isfinite(d)) {
          ++reachable;
          worst = std::max(worst, d);
        }
      }
      info << "target " << g.label(spec.targets[i]) << ": " << reachable
           << " nodes reach it, max distance " << format_double(worst) << "\n";
    }
    info << "kept " << result.graph.edge_count() << " of " << g.edge_count()
         << " edges\n";
  }
  return kExitOk;
}

int run_observe(const Options& opt, const std::string& observable,
                const std::string& mass_at, const std::string& mass_file,
                double t, const std::string& at, const std::string& origin,
                const std::string& from, int quad_steps, double dx,
                double dy) {
  Graph g = read_edge_list_file(opt.graph_path);
  Kind kind = kind_from_string(opt.kind_name);

  if (observable == "grid-mean") {
    auto [ax, ay] = grid_alphas(kind, dx, dy);
    auto [mx, my] = grid_mean(ax, ay, dx, dy, t);
    std::cout << format_double(mx) << ' ' << format_double(my) << "\n";
    return kExitOk;
  }

  AdvectionMatrix m = build_operator(g, kind);
  if (observable == "limit-split") {
    NodeId v = resolve_node(g, from.empty() ? mass_at : from);
    for (std::uint32_t e : g.out_edges(v)) {
      NodeId u = g.edge(e).dst;
      std::cout << g.label(u) << ' ' << format_double(limit_cone_mass(m, v, u))
                << "\n";
    }
    return kExitOk;
  }

  StateVector f0 = initial_condition(g, mass_at, mass_file);
  if (observable == "displacement") {
    Potential pot = compute_potential(g);
    NodeId v = resolve_node(g, origin.empty() ? mass_at : origin);
    StateVector ft = evolve(m, f0, t, opt.tol);
    std::cout << format_double(average_displacement(pot, v, ft)) << "\n";
    return kExitOk;
  }
  if (observable == "cone-mass") {
    NodeId u = resolve_node(g, at);
    StateVector ft = evolve(m, f0, t, opt.tol);
    std::cout << format_double(cone_mass(g, ft, u)) << "\n";
    return kExitOk;
  }
  if (observable == "flow-residual") {
    NodeId u = resolve_node(g, at);
    FlowCheck check = flow_residual(g, m, f0, u, t, quad_steps, opt.tol);
    std::cout << format_double(check.residual) << "\n";
    if (!opt.quiet) {
      std::cerr << "quad_steps=" << quad_steps << " tol=" << format_double(opt.tol)
                << "\n";
      if (!check.tree_ok || !check.support_ok) {
        std::cerr << "warning: identity hypotheses unmet ("
                  << (check.tree_ok ? "" : "not an oriented tree")
                  << (!check.tree_ok && !check.support_ok ? ", " : "")
                  << (check.support_ok ? "" : "support outside predecessors")
                  << ")\n";
      }
    }
    return kExitOk;
  }
  fail(Errc::bad_params, "unknown observable '" + observable + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Advection dynamics on distance-weighted directed graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--tol", opt.tol, "Numerical tolerance");
  app.add_option("--output,-o", opt.output, "Output path (default stdout)");
  app.add_flag("--quiet,-q", opt.quiet, "Suppress summary lines");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a benchmark graph");
  std::string scenario;
  gen->add_option("scenario", scenario,
                  "two-cycles | grid | half-line | tree | two-leaf")
      ->required();
  int p = 5, q = 9, nx = 2, ny = 2, n = 400;
  double dx = 3.0, dy = 1.0, dw = 1.0, du = 2.0;
  std::string root_csv, depth_csv;
  gen->add_option("--p", p, "Left cycle edge count");
  gen->add_option("--q", q, "Right cycle edge count");
  gen->add_option("--nx", nx, "Grid width in nodes");
  gen->add_option("--ny", ny, "Grid height in nodes");
  gen->add_option("--dx", dx, "Cell width");
  gen->add_option("--dy", dy, "Cell height");
  gen->add_option("--n", n, "Half-line truncation node");
  gen->add_option("--root-distances", root_csv, "Tree root edge lengths (csv)");
  gen->add_option("--depth-distances", depth_csv,
                  "Tree chain edge lengths (csv)");
  gen->add_option("--dw", dw, "Two-leaf distance to w");
  gen->add_option("--du", du, "Two-leaf distance to u");

  // check
  auto* check = app.add_subcommand("check", "Verify the operator axioms");
  check->add_option("graph", opt.graph_path, "Edge-list file")->required();
  check->add_option("--kind", opt.kind_name, "Operator kind A1..A5");
  std::string matrix_out;
  check->add_option("--matrix-out", matrix_out, "Write the operator as COO");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Integrate the transport ODE");
  simulate->add_option("graph", opt.graph_path, "Edge-list file")->required();
  simulate->add_option("--kind", opt.kind_name, "Operator kind A1..A5");
  std::string mass_at, mass_file, times_csv;
  simulate->add_option("--mass-at", mass_at, "Unit mass at this node");
  simulate->add_option("--mass-file", mass_file, "Initial condition file");
  simulate->add_option("--times", times_csv, "Ascending sample times (csv)")
      ->required();

  // orient
  auto* orient = app.add_subcommand("orient", "Two-target road orientation");
  orient->add_option("graph", opt.graph_path, "Edge-list file")->required();
  std::vector<std::string> targets;
  orient->add_option("--targets", targets, "Target nodes")
      ->required()
      ->delimiter(',');
  bool no_sinks = false, undirected = false;
  orient->add_flag("--no-sinks", no_sinks, "Keep the targets' outgoing edges");
  orient->add_flag("--undirected-metric", undirected,
                   "Distances ignore edge directions");

  // observe
  auto* observe = app.add_subcommand("observe", "Closed-form observables");
  observe->add_option("graph", opt.graph_path, "Edge-list file")->required();
  std::string observable, at, origin, from;
  double t = 0.0;
  int quad_steps = 256;
  observe
      ->add_option("observable", observable,
                   "displacement | cone-mass | flow-residual | limit-split | "
                   "grid-mean")
      ->required();
  observe->add_option("--kind", opt.kind_name, "Operator kind A1..A5");
  observe->add_option("--mass-at", mass_at, "Unit mass at this node");
  observe->add_option("--mass-file", mass_file, "Initial condition file");
  observe->add_option("--t", t, "Evolution time");
  observe->add_option("--at", at, "Observed node");
  observe->add_option("--origin", origin, "Displacement origin");
  observe->add_option("--from", from, "Branching node for limit-split");
  observe->add_option("--quad-steps", quad_steps, "Simpson panels");
  observe->add_option("--dx", dx, "Grid cell width");
  observe->add_option("--dy", dy, "Grid cell height");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      return run_gen(scenario, opt, p, q, nx, ny, dx, dy, n, root_csv,
                     depth_csv, dw, du);
    }
    if (check->parsed()) return run_check(opt, matrix_out);
    if (simulate->parsed()) return run_simulate(opt, mass_at, mass_file, times_csv);
    if (orient->parsed()) return run_orient(opt, targets, no_sinks, undirected);
    if (observe->parsed()) {
      return run_observe(opt, observable, mass_at, mass_file, t, at, origin,
                         from, quad_steps, dx, dy);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code() == Errc::parse_error || e.code() == Errc::io_error)
               ? kExitIo
               : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
