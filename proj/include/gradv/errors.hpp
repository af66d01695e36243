#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradv {

enum class Errc {
  self_loop,
  duplicate_edge,
  non_positive_length,
  index_out_of_range,
  no_potential,
  different_components,
  dimension_mismatch,
  non_finite_input,
  parse_error,
  io_error,
  unknown_node,
  target_unreachable,
  not_a_successor,
  zero_diagonal,
  not_simple_graph,
  bad_params,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, std::string(errc_name(code)) + ": " + msg);
}

}  // namespace gradv
