#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "gradv/graph.hpp"

namespace gradv {

using StateVector = std::vector<double>;

enum class Kind { a1, a2, a3, a4, a5 };

std::string_view kind_name(Kind k);           // "A1".."A5"
Kind kind_from_string(std::string_view name); // throws bad_params

struct MatrixEntry {
  NodeId index;  // row id in a column, column id in a row
  double value;
};

/**
 * Sparse advection operator, stored column-major because every axiom
 * characterization is a per-column statement. Entry (u,v) is the
 * coefficient a_uv of f(v) in [A f](u). Columns always carry an explicit
 * diagonal entry. A row-major transpose index is built once for
 * matrix-vector products and row norms. Immutable after construction.
 */
class AdvectionMatrix {
public:
  static AdvectionMatrix from_columns(
      Kind kind, NodeId n, std::vector<std::vector<MatrixEntry>> columns);

  Kind kind() const { return kind_; }
  NodeId size() const { return n_; }

  // Entries of column v / row u, sorted by the far index.
  std::span<const MatrixEntry> column(NodeId v) const;
  std::span<const MatrixEntry> row(NodeId u) const;

  double diagonal(NodeId v) const { return diag_[static_cast<std::size_t>(v)]; }
  std::span<const double> diagonal() const { return diag_; }

  // a_uv, zero when outside the stored pattern.
  double entry(NodeId u, NodeId v) const;
  bool has_entry(NodeId u, NodeId v) const;

private:
  Kind kind_ = Kind::a4;
  NodeId n_ = 0;
  std::vector<std::size_t> col_ptr_;
  std::vector<MatrixEntry> col_entries_;
  std::vector<std::size_t> row_ptr_;
  std::vector<MatrixEntry> row_entries_;
  std::vector<double> diag_;
};

// Builds one of the five operator kinds from the graph. Nodes without
// successors yield all-zero columns for A3/A4/A5 (sink semantics).
AdvectionMatrix build_operator(const Graph& g, Kind kind);

// y = A f via the row index. Throws dimension_mismatch.
StateVector apply(const AdvectionMatrix& m, const StateVector& f);

// Max absolute row sum.
double inf_norm(const AdvectionMatrix& m);
// Max absolute column sum.
double one_norm(const AdvectionMatrix& m);

// Coordinate text export: header "# kind=<K> n=<n>", then "row col value"
// lines in (row, col) order, 17 significant digits.
void write_matrix_coo(const AdvectionMatrix& m, std::ostream& os);

}  // namespace gradv
