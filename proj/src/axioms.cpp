#include "gradv/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "gradv/format.hpp"

namespace gradv {

std::string_view axiom_status_name(AxiomStatus s) {
  switch (s) {
    case AxiomStatus::pass: return "pass";
    case AxiomStatus::fail: return "fail";
    case AxiomStatus::not_applicable: return "n/a";
  }
  return "?";
}

namespace {

void record_worst(AxiomVerdict& v, double violation,
                  std::initializer_list<NodeId> nodes, double value) {
  if (violation > v.worst_violation) {
    v.worst_violation = violation;
    v.witness_nodes = nodes;
    v.witness_value = value;
  }
}

void finalize(AxiomVerdict& v, double tol) {
  v.status = v.worst_violation <= tol ? AxiomStatus::pass : AxiomStatus::fail;
}

}  // namespace

bool AxiomReport::all_applicable_pass() const {
  for (const AxiomVerdict* v : {&locality, &mass_transfer_1, &mass_transfer_2,
                                &advection_1, &advection_2, &splitting}) {
    if (v->status == AxiomStatus::fail) return false;
  }
  return true;
}

AxiomVerdict check_locality(const AdvectionMatrix& m, const Graph& g,
                            double tol) {
  AxiomVerdict v;
  for (NodeId col = 0; col < m.size(); ++col) {
    for (const MatrixEntry& e : m.column(col)) {
      if (e.index == col || e.value == 0.0) continue;
      if (!g.has_edge(e.index, col) && !g.has_edge(col, e.index)) {
        record_worst(v, std::abs(e.value), {e.index, col}, e.value);
      }
    }
  }
  finalize(v, tol);
  return v;
}

AxiomVerdict check_mass_transfer_1(const AdvectionMatrix& m, double tol) {
  AxiomVerdict v;
  for (NodeId col = 0; col < m.size(); ++col) {
    for (const MatrixEntry& e : m.column(col)) {
      if (e.index == col) continue;
      if (e.value > 0.0) {
        record_worst(v, e.value, {e.index, col}, e.value);
      }
    }
  }
  finalize(v, tol);
  return v;
}

AxiomVerdict check_mass_transfer_2(const AdvectionMatrix& m, double tol) {
  AxiomVerdict v;
  for (NodeId col = 0; col < m.size(); ++col) {
    double sum = 0.0;
    for (const MatrixEntry& e : m.column(col)) sum += e.value;
    record_worst(v, std::abs(sum), {col}, sum);
  }
  finalize(v, tol);
  return v;
}

AxiomVerdict check_advection_1(const AdvectionMatrix& m, const Graph& g,
                               double tol) {
  AxiomVerdict v;
  for (NodeId col = 0; col < m.size(); ++col) {
    for (const MatrixEntry& e : m.column(col)) {
      if (e.index == col || e.value == 0.0) continue;
      if (!g.has_edge(col, e.index)) {
        record_worst(v, std::abs(e.value), {e.index, col}, e.value);
      }
    }
  }
  finalize(v, tol);
  return v;
}

AxiomVerdict check_advection_2(const AdvectionMatrix& m, const Graph& g,
                               double tol, int* skipped_sinks) {
  AxiomVerdict v;
  int skipped = 0;
  for (NodeId node = 0; node < m.size(); ++node) {
    if (g.out_degree(node) == 0) {
      ++skipped;
      continue;
    }
    double sum = 0.0;
    for (std::uint32_t e : g.out_edges(node)) {
      sum += g.edge(e).length * m.entry(g.edge(e).dst, node);
    }
    record_worst(v, std::abs(sum + 1.0), {node}, sum);
  }
  if (skipped_sinks) *skipped_sinks = skipped;
  finalize(v, tol);
  return v;
}

AxiomVerdict check_splitting(const AdvectionMatrix& m, const Graph& g,
                             double tol) {
  AxiomVerdict v;
  bool any_branching = false;
  for (NodeId node = 0; node < m.size(); ++node) {
    auto out = g.out_edges(node);
    if (out.size() < 2) continue;
    any_branching = true;
    // d_vu * a_uv must agree across all successors of the node.
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      const Edge& eu = g.edge(out[i]);
      const Edge& ew = g.edge(out[i + 1]);
      double pu = eu.length * m.entry(eu.dst, node);
      double pw = ew.length * m.entry(ew.dst, node);
      double scale = std::max({std::abs(pu), std::abs(pw), 1e-300});
      double rel = std::abs(pu - pw) / scale;
      record_worst(v, rel, {node, eu.dst, ew.dst}, pu - pw);
    }
  }
  finalize(v, tol);

  // The ratio characterization presupposes mass transfer and forward
  // motion; without them the verdict cannot bind either way.
  if (any_branching) {
    bool hypotheses =
        check_mass_transfer_1(m, tol).status == AxiomStatus::pass &&
        check_mass_transfer_2(m, tol).status == AxiomStatus::pass &&
        check_advection_1(m, g, tol).status == AxiomStatus::pass;
    if (!hypotheses) v.status = AxiomStatus::not_applicable;
  }
  return v;
}

AxiomReport check_axioms(const AdvectionMatrix& m, const Graph& g,
                         double tol) {
  AxiomReport r;
  r.kind = m.kind();
  r.tol = tol;
  r.locality = check_locality(m, g, tol);
  r.mass_transfer_1 = check_mass_transfer_1(m, tol);
  r.mass_transfer_2 = check_mass_transfer_2(m, tol);
  r.advection_1 = check_advection_1(m, g, tol);
  r.advection_2 = check_advection_2(m, g, tol, &r.skipped_sinks);
  r.splitting = check_splitting(m, g, tol);
  return r;
}

namespace {

constexpr const char* kAxiomLabels[6] = {
    "Locality",      "Mass Transfer I", "Mass Transfer II",
    "Advection I",   "Advection II",    "Splitting"};

const AxiomVerdict* report_entry(const AxiomReport& r, int i) {
  switch (i) {
    case 0: return &r.locality;
    case 1: return &r.mass_transfer_1;
    case 2: return &r.mass_transfer_2;
    case 3: return &r.advection_1;
    case 4: return &r.advection_2;
    default: return &r.splitting;
  }
}

constexpr const char* kReportKeys[6] = {"locality", "mass_transfer_1",
                                        "mass_transfer_2", "advection_1",
                                        "advection_2", "splitting"};

}  // namespace

void write_report_table(const AxiomReport& r, std::ostream& os) {
  os << "Axiom              " << kind_name(r.kind) << "\n";
  os << "----------------------\n";
  for (int i = 0; i < 6; ++i) {
    const AxiomVerdict* v = report_entry(r, i);
    const char* mark = v->status == AxiomStatus::pass ? "Y"
                       : v->status == AxiomStatus::fail ? "N"
                                                        : "n/a";
    os << kAxiomLabels[i];
    for (std::size_t pad = std::string_view(kAxiomLabels[i]).size(); pad < 19;
         ++pad) {
      os << ' ';
    }
    os << mark << "\n";
  }
  if (r.skipped_sinks > 0) {
    os << "(Advection II skipped " << r.skipped_sinks << " sink node"
       << (r.skipped_sinks == 1 ? "" : "s") << ")\n";
  }
}

void write_report_kv(const AxiomReport& r, std::ostream& os) {
  os << "kind=" << kind_name(r.kind) << "\n";
  os << "tol=" << format_double(r.tol) << "\n";
  for (int i = 0; i < 6; ++i) {
    const AxiomVerdict* v = report_entry(r, i);
    os << kReportKeys[i] << ".status=" << axiom_status_name(v->status) << "\n";
    os << kReportKeys[i] << ".worst=" << format_double(v->worst_violation)
       << "\n";
    if (!v->witness_nodes.empty()) {
      os << kReportKeys[i] << ".witness.nodes=";
      for (std::size_t j = 0; j < v->witness_nodes.size(); ++j) {
        os << (j ? "," : "") << v->witness_nodes[j];
      }
      os << "\n";
      os << kReportKeys[i]
         << ".witness.value=" << format_double(v->witness_value) << "\n";
    }
  }
  os << "advection_2.skipped_sinks=" << r.skipped_sinks << "\n";
  os << "overall=" << (r.all_applicable_pass() ? "pass" : "fail") << "\n";
}

}  // namespace gradv
