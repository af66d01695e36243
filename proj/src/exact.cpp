#include "gradv/exact.hpp"

#include <algorithm>
#include <cmath>

namespace gradv {

bool has_integer_lengths(const Graph& g, long long max_value) {
  for (const Edge& e : g.edges()) {
    if (e.length != std::floor(e.length)) return false;
    if (e.length < 1.0 || e.length > static_cast<double>(max_value)) return false;
  }
  return true;
}

std::vector<std::vector<RationalEntry>> build_operator_exact(const Graph& g,
                                                             Kind kind) {
  if (!has_integer_lengths(g)) {
    fail(Errc::bad_params, "exact mode requires small integer edge lengths");
  }
  const NodeId n = g.node_count();
  auto len = [&](std::uint32_t e) {
    return static_cast<long long>(g.edge(e).length);
  };

  std::vector<std::vector<RationalEntry>> columns(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    auto& col = columns[static_cast<std::size_t>(v)];
    const long long out_deg = g.out_degree(v);
    Rational diag(0);
    switch (kind) {
      case Kind::a1:
        for (std::uint32_t e : g.in_edges(v)) {
          col.push_back({g.edge(e).src, Rational(1, len(e))});
        }
        for (std::uint32_t e : g.out_edges(v)) diag -= Rational(1, len(e));
        break;
      case Kind::a2:
        for (std::uint32_t e : g.out_edges(v)) {
          col.push_back({g.edge(e).dst, Rational(-1, len(e))});
        }
        for (std::uint32_t e : g.in_edges(v)) diag += Rational(1, len(e));
        break;
      case Kind::a3:
        for (std::uint32_t e : g.out_edges(v)) {
          Rational w(1, len(e));
          col.push_back({g.edge(e).dst, -w});
          diag += w;
        }
        break;
      case Kind::a4:
        for (std::uint32_t e : g.out_edges(v)) {
          Rational w(1, out_deg * len(e));
          col.push_back({g.edge(e).dst, -w});
          diag += w;
        }
        break;
      case Kind::a5: {
        long long total = 0;
        for (std::uint32_t e : g.out_edges(v)) total += len(e);
        Rational rate = out_deg > 0 ? Rational(1, total) : Rational(0);
        for (std::uint32_t e : g.out_edges(v)) {
          col.push_back({g.edge(e).dst, -rate});
          diag += rate;
        }
        break;
      }
    }
    col.push_back({v, diag});
    std::sort(col.begin(), col.end(),
              [](const RationalEntry& a, const RationalEntry& b) {
                return a.index < b.index;
              });
  }
  return columns;
}

}  // namespace gradv
