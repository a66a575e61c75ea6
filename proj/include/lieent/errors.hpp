#pragma once

#include <stdexcept>
#include <string>

namespace lieent {

enum class errc {
  invalid_argument,
  dimension_mismatch,
  parse_error,
  variant_mismatch,
  unsupported_variant,
  validation_failed,
  singular_matrix,
  singular_lattice_map,
  not_surjective,
  not_elliptic,
  non_convergence,
  budget_exceeded,
};

const char* errc_name(errc c);

// True for conditions caused by bad input rather than by a numeric breakdown.
bool is_input_error(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace lieent
