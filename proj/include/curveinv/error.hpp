#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curveinv {

enum class ErrorKind {
  InvalidArgument,
  Parse,
  ZeroPolynomial,
  NotConvenient,
  TruncationTooShort,
  NonPrimitiveRay,
  NonUnimodularAdjacent,
  BadBoundary,
  BadOrder,
  IndexOutOfRange,
  TooFewCones,
  InvalidFan,
  IrrationalExceptionalPoint,
  Inconsistent,
  DegreeCapExceeded,
  BranchNotOnCurve,
  NonIntegerDelta,
  RetriesExhausted,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type. `index()` is
// set for errors that point at a position (e.g. the offending ray of a fan).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace curveinv
