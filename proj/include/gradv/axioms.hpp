#pragma once

#include <iosfwd>
#include <vector>

#include "gradv/operators.hpp"

namespace gradv {

inline constexpr double kDefaultAxiomTol = 1e-10;

enum class AxiomStatus { pass, fail, not_applicable };

std::string_view axiom_status_name(AxiomStatus s);  // "pass"/"fail"/"n/a"

struct AxiomVerdict {
  AxiomStatus status = AxiomStatus::pass;
  double worst_violation = 0.0;
  // Nodes pinning the worst violation (meaning depends on the check) and
  // the offending scalar; empty when the check passes vacuously.
  std::vector<NodeId> witness_nodes;
  double witness_value = 0.0;
};

/**
 * Per-axiom verdicts for one operator on one graph, with numerical
 * witnesses. skipped_sinks counts the nodes without successors that the
 * unit-speed check cannot constrain.
 */
struct AxiomReport {
  Kind kind = Kind::a4;
  double tol = kDefaultAxiomTol;
  AxiomVerdict locality;
  AxiomVerdict mass_transfer_1;
  AxiomVerdict mass_transfer_2;
  AxiomVerdict advection_1;
  AxiomVerdict advection_2;
  AxiomVerdict splitting;
  int skipped_sinks = 0;

  bool all_applicable_pass() const;
};

// Sparsity confined to closed neighborhoods: entry (u,v) != 0 requires
// u = v or an edge between u and v in either direction.
AxiomVerdict check_locality(const AdvectionMatrix& m, const Graph& g,
                            double tol = kDefaultAxiomTol);

// Positivity preservation: every off-diagonal entry <= 0.
AxiomVerdict check_mass_transfer_1(const AdvectionMatrix& m,
                                   double tol = kDefaultAxiomTol);

// Mass conservation: every column sums to zero.
AxiomVerdict check_mass_transfer_2(const AdvectionMatrix& m,
                                   double tol = kDefaultAxiomTol);

// Forward motion: every nonzero off-diagonal entry (u,v) sits on a
// forward edge (v,u).
AxiomVerdict check_advection_1(const AdvectionMatrix& m, const Graph& g,
                               double tol = kDefaultAxiomTol);

// Unit speed: sum over successors u of d_vu * a_uv equals -1 for every
// node with at least one successor; sinks are skipped and counted.
AxiomVerdict check_advection_2(const AdvectionMatrix& m, const Graph& g,
                               double tol = kDefaultAxiomTol,
                               int* skipped_sinks = nullptr);

// Length-weighted splitting: d_vu * a_uv constant over the successors of
// every branching node. Reported not_applicable when the mass-transfer or
// forward-motion checks fail, since the characterization only binds under
// those hypotheses.
AxiomVerdict check_splitting(const AdvectionMatrix& m, const Graph& g,
                             double tol = kDefaultAxiomTol);

AxiomReport check_axioms(const AdvectionMatrix& m, const Graph& g,
                         double tol = kDefaultAxiomTol);

// Human-readable fulfillment table (axiom rows, one operator column).
void write_report_table(const AxiomReport& r, std::ostream& os);
// Machine-readable key=value lines.
void write_report_kv(const AxiomReport& r, std::ostream& os);

}  // namespace gradv
