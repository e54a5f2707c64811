#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dgog {

enum class ErrorKind {
  Parse,
  Validation,
  NotComposable,
  SourceMismatch,
  DomainViolation,
  NotInDomain,
  InfiniteIndex,
  InfiniteDegree,
  BallTooShallow,
  NonCyclicInfinite,
  SingularMatrix,
  ZeroPatternMismatch,
};

/// Stable kebab-case name used in CLI diagnostics (`error:<kind>:`).
std::string_view to_string(ErrorKind kind);

/// Every domain failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dgog
