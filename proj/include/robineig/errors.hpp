#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace robineig {

enum class ErrorKind {
  InvalidArgument,
  NoSignChange,
  NoRootInRange,
  ConstraintViolated,
  StepFailure,
  DomainError,
  QTooSmall,
  DimensionError,
  IterationDivergence,
  NoPositiveEigenpair,
  NoSignChangeInBracket,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Failure raised by every solver and constructor in the library. The kind is
/// what the CLI reports on stderr; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace robineig
