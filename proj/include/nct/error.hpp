#pragma once

#include <stdexcept>
#include <string>

namespace nct {

/// Domain error with a stable machine-readable code.
///
/// Codes used across the library: DimensionMismatch, NotAntisymmetric,
/// NotTotallySkew, PhiSingular, NotTransverse, BadLift, NoLift,
/// AmbiguousLift, Singular, NotScalar, NotACocycle, WrongAlgebra,
/// UnsupportedDimension, DivisionByZero, InvalidArgument.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, std::string context = "")
      : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  std::string code_;
  std::string context_;
};

}  // namespace nct
