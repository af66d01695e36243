#include "gradv/operators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "gradv/format.hpp"

namespace gradv {

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::a1: return "A1";
    case Kind::a2: return "A2";
    case Kind::a3: return "A3";
    case Kind::a4: return "A4";
    case Kind::a5: return "A5";
  }
  return "?";
}

Kind kind_from_string(std::string_view name) {
  for (Kind k : {Kind::a1, Kind::a2, Kind::a3, Kind::a4, Kind::a5}) {
    if (name == kind_name(k)) return k;
  }
  fail(Errc::bad_params, "unknown operator kind '" + std::string(name) +
                             "' (expected A1..A5)");
}

AdvectionMatrix AdvectionMatrix::from_columns(
    Kind kind, NodeId n, std::vector<std::vector<MatrixEntry>> columns) {
  if (static_cast<NodeId>(columns.size()) != n) {
    fail(Errc::dimension_mismatch, "column count does not match size");
  }
  AdvectionMatrix m;
  m.kind_ = kind;
  m.n_ = n;
  m.diag_.assign(static_cast<std::size_t>(n), 0.0);

  m.col_ptr_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    auto& col = columns[static_cast<std::size_t>(v)];
    std::sort(col.begin(), col.end(),
              [](const MatrixEntry& a, const MatrixEntry& b) {
                return a.index < b.index;
              });
    for (const MatrixEntry& e : col) {
      if (e.index < 0 || e.index >= n) {
        fail(Errc::index_out_of_range, "matrix entry outside dimension");
      }
      if (e.index == v) m.diag_[static_cast<std::size_t>(v)] = e.value;
      m.col_entries_.push_back(e);
    }
    m.col_ptr_[static_cast<std::size_t>(v) + 1] = m.col_entries_.size();
  }

  // Transpose index for row access.
  std::vector<std::size_t> row_count(static_cast<std::size_t>(n), 0);
  for (NodeId v = 0; v < n; ++v) {
    for (std::size_t i = m.col_ptr_[static_cast<std::size_t>(v)];
         i < m.col_ptr_[static_cast<std::size_t>(v) + 1]; ++i) {
      ++row_count[static_cast<std::size_t>(m.col_entries_[i].index)];
    }
  }
  m.row_ptr_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId u = 0; u < n; ++u) {
    m.row_ptr_[static_cast<std::size_t>(u) + 1] =
        m.row_ptr_[static_cast<std::size_t>(u)] + row_count[static_cast<std::size_t>(u)];
  }
  m.row_entries_.resize(m.col_entries_.size());
  std::vector<std::size_t> cursor(m.row_ptr_.begin(), m.row_ptr_.end() - 1);
  for (NodeId v = 0; v < n; ++v) {
    for (std::size_t i = m.col_ptr_[static_cast<std::size_t>(v)];
         i < m.col_ptr_[static_cast<std::size_t>(v) + 1]; ++i) {
      auto u = static_cast<std::size_t>(m.col_entries_[i].index);
      m.row_entries_[cursor[u]++] = MatrixEntry{v, m.col_entries_[i].value};
    }
  }
  return m;
}

std::span<const MatrixEntry> AdvectionMatrix::column(NodeId v) const {
  if (v < 0 || v >= n_) fail(Errc::index_out_of_range, "column index");
  return {col_entries_.data() + col_ptr_[static_cast<std::size_t>(v)],
          col_ptr_[static_cast<std::size_t>(v) + 1] - col_ptr_[static_cast<std::size_t>(v)]};
}

std::span<const MatrixEntry> AdvectionMatrix::row(NodeId u) const {
  if (u < 0 || u >= n_) fail(Errc::index_out_of_range, "row index");
  return {row_entries_.data() + row_ptr_[static_cast<std::size_t>(u)],
          row_ptr_[static_cast<std::size_t>(u) + 1] - row_ptr_[static_cast<std::size_t>(u)]};
}

double AdvectionMatrix::entry(NodeId u, NodeId v) const {
  auto col = column(v);
  auto it = std::lower_bound(col.begin(), col.end(), u,
                             [](const MatrixEntry& e, NodeId row) {
                               return e.index < row;
                             });
  if (it == col.end() || it->index != u) return 0.0;
  return it->value;
}

bool AdvectionMatrix::has_entry(NodeId u, NodeId v) const {
  auto col = column(v);
  auto it = std::lower_bound(col.begin(), col.end(), u,
                             [](const MatrixEntry& e, NodeId row) {
                               return e.index < row;
                             });
  return it != col.end() && it->index == u;
}

AdvectionMatrix build_operator(const Graph& g, Kind kind) {
  const NodeId n = g.node_count();
  std::vector<std::vector<MatrixEntry>> columns(static_cast<std::size_t>(n));

  // Column v holds a_uv, the coefficients of a unit mass at v. Diagonals
  // accumulate over the sorted adjacency so that the off-diagonal
  // magnitudes of a column sum to the diagonal bit-for-bit for A3/A4/A5.
  for (NodeId v = 0; v < n; ++v) {
    auto& col = columns[static_cast<std::size_t>(v)];
    const int out_deg = g.out_degree(v);
    double diag = 0.0;
    switch (kind) {
      case Kind::a1:
        // Forward-difference pattern: column support on the predecessors.
        for (std::uint32_t e : g.in_edges(v)) {
          col.push_back({g.edge(e).src, 1.0 / g.edge(e).length});
        }
        for (std::uint32_t e : g.out_edges(v)) diag -= 1.0 / g.edge(e).length;
        break;
      case Kind::a2:
        for (std::uint32_t e : g.out_edges(v)) {
          col.push_back({g.edge(e).dst, -1.0 / g.edge(e).length});
        }
        for (std::uint32_t e : g.in_edges(v)) diag += 1.0 / g.edge(e).length;
        break;
      case Kind::a3:
        for (std::uint32_t e : g.out_edges(v)) {
          double w = 1.0 / g.edge(e).length;
          col.push_back({g.edge(e).dst, -w});
          diag += w;
        }
        break;
      case Kind::a4:
        for (std::uint32_t e : g.out_edges(v)) {
          double w = 1.0 / (out_deg * g.edge(e).length);
          col.push_back({g.edge(e).dst, -w});
          diag += w;
        }
        break;
      case Kind::a5: {
        double total = 0.0;
        for (std::uint32_t e : g.out_edges(v)) total += g.edge(e).length;
        double rate = out_deg > 0 ? 1.0 / total : 0.0;
        for (std::uint32_t e : g.out_edges(v)) {
          col.push_back({g.edge(e).dst, -rate});
          diag += rate;
        }
        break;
      }
    }
    col.push_back({v, diag});
  }
  return AdvectionMatrix::from_columns(kind, n, std::move(columns));
}

StateVector apply(const AdvectionMatrix& m, const StateVector& f) {
  if (static_cast<NodeId>(f.size()) != m.size()) {
    fail(Errc::dimension_mismatch,
         "state has " + std::to_string(f.size()) + " entries, matrix is " +
             std::to_string(m.size()));
  }
  StateVector result(f.size(), 0.0);
  for (NodeId u = 0; u < m.size(); ++u) {
    double acc = 0.0;
    for (const MatrixEntry& e : m.row(u)) {
      acc += e.value * f[static_cast<std::size_t>(e.index)];
    }
    result[static_cast<std::size_t>(u)] = acc;
  }
  return result;
}

double inf_norm(const AdvectionMatrix& m) {
  double worst = 0.0;
  for (NodeId u = 0; u < m.size(); ++u) {
    double sum = 0.0;
    for (const MatrixEntry& e : m.row(u)) sum += std::abs(e.value);
    worst = std::max(worst, sum);
  }
  return worst;
}

double one_norm(const AdvectionMatrix& m) {
  double worst = 0.0;
  for (NodeId v = 0; v < m.size(); ++v) {
    double sum = 0.0;
    for (const MatrixEntry& e : m.column(v)) sum += std::abs(e.value);
    worst = std::max(worst, sum);
  }
  return worst;
}

void write_matrix_coo(const AdvectionMatrix& m, std::ostream& os) {
  os << "# kind=" << kind_name(m.kind()) << " n=" << m.size() << "\n";
  for (NodeId u = 0; u < m.size(); ++u) {
    for (const MatrixEntry& e : m.row(u)) {
      os << u << ' ' << e.index << ' ' << format_double(e.value) << "\n";
    }
  }
}

}  // namespace gradv
