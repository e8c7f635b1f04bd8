#include "robineig/errors.hpp"

namespace robineig {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NoSignChange: return "NoSignChange";
    case ErrorKind::NoRootInRange: return "NoRootInRange";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::StepFailure: return "StepFailure";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::QTooSmall: return "QTooSmall";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::IterationDivergence: return "IterationDivergence";
    case ErrorKind::NoPositiveEigenpair: return "NoPositiveEigenpair";
    case ErrorKind::NoSignChangeInBracket: return "NoSignChangeInBracket";
  }
  return "Unknown";
}

}  // namespace robineig
