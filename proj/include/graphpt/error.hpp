#pragma once

#include <stdexcept>
#include <string>

namespace graphpt {

enum class errc {
  empty_graph,
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  disconnected,
  degenerate_graph,
  invalid_witness,
  length_mismatch,
  invalid_argument,
  empty_absorbing_set,
  walk_cap_exceeded,
  empty_x,
  x_covers_all_vertices,
  zero_function,
  spectrum_too_large,
  w_undefined_where_f_nonzero,
  f_not_vanishing_on_boundary,
  interior_empty,
  not_a_measure,
  vertex_in_boundary,
  kernel_not_admissible,
  non_termination,
  parse_error,
  bad_length,
  non_printable_byte,
  disconnected_after_parse,
  io_error,
  internal_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace graphpt
