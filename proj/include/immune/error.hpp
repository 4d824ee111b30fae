#pragma once

#include <stdexcept>
#include <string>

namespace immune {

enum class errc {
  self_loop,
  duplicate_edge,
  vertex_out_of_range,
  not_a_tree,
  negative_capacity,
  instance_too_large,
  threshold_out_of_range,
  total_out_of_range,
  invalid_matching,
  budget_infeasible,
  not_regular,
  budget_out_of_range,
  size_mismatch,
  parse_error,
};

/// Library error carrying a machine-checkable code next to the message.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace immune
