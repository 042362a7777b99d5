#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hexalloc {

enum class ErrorCode {
  kNotInLattice,
  kInvalidLattice,
  kInvalidDomainTable,
  kCapacity,
  kSizeLimit,
  kIncompleteColoring,
  kInsufficientSpectrum,
  kInvalidSuperframe,
  kOrdering,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the core library carries a code so callers (the CLI
// in particular) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hexalloc
