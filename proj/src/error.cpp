#include "su11/error.hpp"

namespace su11 {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Unnormalized: return "Unnormalized";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::TooFar: return "TooFar";
    case ErrorKind::InvalidAxis: return "InvalidAxis";
    case ErrorKind::ExtractionFailure: return "ExtractionFailure";
    case ErrorKind::NearBoundary: return "NearBoundary";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::ClassMismatch: return "ClassMismatch";
    case ErrorKind::WrongClass: return "WrongClass";
    case ErrorKind::LowerSheet: return "LowerSheet";
    case ErrorKind::Blowup: return "Blowup";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace su11
