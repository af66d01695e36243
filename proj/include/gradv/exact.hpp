#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "gradv/graph.hpp"
#include "gradv/operators.hpp"

namespace gradv {

// Exact verification mode: when all edge lengths are small integers the
// operator entries are rationals and can be validated as exact fractions.

using Rational = boost::rational<long long>;

struct RationalEntry {
  NodeId index;
  Rational value;
};

bool has_integer_lengths(const Graph& g, long long max_value = 1'000'000);

// Columns of the operator with exact rational entries, diagonal included,
// sorted by row. Throws bad_params unless has_integer_lengths(g).
std::vector<std::vector<RationalEntry>> build_operator_exact(const Graph& g,
                                                             Kind kind);

}  // namespace gradv
