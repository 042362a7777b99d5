#include "hexalloc/error.hpp"

namespace hexalloc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotInLattice: return "not-in-lattice";
    case ErrorCode::kInvalidLattice: return "invalid-lattice";
    case ErrorCode::kInvalidDomainTable: return "invalid-domain-table";
    case ErrorCode::kCapacity: return "capacity";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kIncompleteColoring: return "incomplete-coloring";
    case ErrorCode::kInsufficientSpectrum: return "insufficient-spectrum";
    case ErrorCode::kInvalidSuperframe: return "invalid-superframe";
    case ErrorCode::kOrdering: return "ordering";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hexalloc
