#pragma once

#include <stdexcept>
#include <string>

namespace nilcoh {

// Stable error codes; the CLI maps them to exit statuses and prints them
// in machine-readable form.
enum class errc {
  jacobi_violation,
  index_out_of_range,
  duplicate_entry,
  not_nilpotent,
  unsupported_center,
  zero_scaling,
  unknown_family,
  degree_out_of_range,
  missing_degree,
  unknown_degree,
  degree_too_high,
  internal_inconsistency,
  parse_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace nilcoh
