#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbcell {

enum class ErrorCode {
  kSingularBasis,
  kUnsupportedDimension,
  kInvalidCellParameters,
  kReductionNonConvergence,
  kDegenerateCell,
  kNotAPrimitiveCell,
  kParse,
};

std::string_view to_string(ErrorCode code);

/// Domain failure raised by every library operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pbcell
