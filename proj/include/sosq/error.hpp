#pragma once

#include <stdexcept>
#include <string>

namespace sosq {

enum class ErrorCode {
  NotSymmetric,
  NotHomogeneousQuartic,
  DegenerateBasis,
  DimensionMismatch,
  OutOfRange,
  UnsupportedN,
  NotInSosCone,
  NotGloballyPsd,
  TooManyVariables,
  Parse,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure in the library surfaces as this exception; the C layer maps
/// code() onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sosq
