#include "nilcoh/errors.hpp"

namespace nilcoh {

const char* errc_name(errc code) {
  switch (code) {
    case errc::jacobi_violation: return "JACOBI_VIOLATION";
    case errc::index_out_of_range: return "INDEX_OUT_OF_RANGE";
    case errc::duplicate_entry: return "DUPLICATE_ENTRY";
    case errc::not_nilpotent: return "NOT_NILPOTENT";
    case errc::unsupported_center: return "UNSUPPORTED_CENTER";
    case errc::zero_scaling: return "ZERO_SCALING";
    case errc::unknown_family: return "UNKNOWN_FAMILY";
    case errc::degree_out_of_range: return "DEGREE_OUT_OF_RANGE";
    case errc::missing_degree: return "MISSING_DEGREE";
    case errc::unknown_degree: return "UNKNOWN_DEGREE";
    case errc::degree_too_high: return "DEGREE_TOO_HIGH";
    case errc::internal_inconsistency: return "INTERNAL_INCONSISTENCY";
    case errc::parse_error: return "PARSE_ERROR";
  }
  return "UNKNOWN_ERROR";
}

}  // namespace nilcoh
