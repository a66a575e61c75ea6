#include "lieent/errors.hpp"

namespace lieent {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "INVALID_ARGUMENT";
    case errc::dimension_mismatch: return "DIMENSION_MISMATCH";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::variant_mismatch: return "VARIANT_MISMATCH";
    case errc::unsupported_variant: return "UNSUPPORTED_VARIANT";
    case errc::validation_failed: return "VALIDATION_FAILED";
    case errc::singular_matrix: return "SINGULAR_MATRIX";
    case errc::singular_lattice_map: return "SINGULAR_LATTICE_MAP";
    case errc::not_surjective: return "NOT_SURJECTIVE";
    case errc::not_elliptic: return "NOT_ELLIPTIC";
    case errc::non_convergence: return "NON_CONVERGENCE";
    case errc::budget_exceeded: return "BUDGET_EXCEEDED";
  }
  return "UNKNOWN";
}

bool is_input_error(errc c) {
  switch (c) {
    case errc::invalid_argument:
    case errc::dimension_mismatch:
    case errc::parse_error:
    case errc::variant_mismatch:
    case errc::unsupported_variant:
    case errc::validation_failed:
    case errc::singular_lattice_map:
    case errc::not_surjective:
    case errc::singular_matrix:
    case errc::not_elliptic:
      return true;
    default:
      return false;
  }
}

}  // namespace lieent
