#pragma once

#include <stdexcept>
#include <string>

namespace fermatmod {

enum class ErrorKind {
  kNotPrime,
  kNotPrimitive,
  kLevelOutOfRange,
  kWidthOverflow,
  kNonInvertible,
  kInexactDivision,
  kNonlinear,
  kZeroSlope,
  kDivisibility,
  kInvalidArgument,
};

const char* ErrorKindName(ErrorKind kind);

// Single exception type for every computational failure in the library.
// The kind lets callers (and the CLI) distinguish failures without string
// matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fermatmod
