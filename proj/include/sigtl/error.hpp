#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace sigtl {

// Every failure the library can signal. The CLI maps these onto exit codes
// (specification-side problems vs. trace-side problems), so new values should
// be added to the right group in tools/sigtl.cpp as well.
enum class Errc {
  // syntax / specification
  syntax,
  undeclared_variable,
  malformed_interval,
  duplicate_declaration,
  missing_assignment,
  unknown_unit,
  bad_declaration,
  // rewriting
  unbounded_horizon,
  past_inside_future,
  misaligned_interval,
  // traces and engines
  trace_value,
  non_monotone_time,
  non_uniform_trace,
  unknown_variable,
  missing_variable,
  future_operator,
  dense_unsupported_operator,
  out_of_domain,
  // interface-aware semantics
  overlapping_sets,
  no_role_declarations,
  // I/O
  csv_schema,
  io,
};

struct Error : std::runtime_error {
  Errc kind;
  std::optional<int> line, column;

  Error(Errc k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  Error(Errc k, const std::string& msg, int ln, int col)
      : std::runtime_error(msg), kind(k), line(ln), column(col) {}
};

[[noreturn]] inline void fail(Errc k, const std::string& msg) { throw Error(k, msg); }

}  // namespace sigtl
