#include "covercalc/errors.hpp"

namespace covercalc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IdenticalLines: return "IdenticalLines";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadPoint: return "BadPoint";
    case ErrorKind::NoetherViolation: return "NoetherViolation";
    case ErrorKind::NotBig: return "NotBig";
    case ErrorKind::ChartFailure: return "ChartFailure";
    case ErrorKind::NegativeIrregularity: return "NegativeIrregularity";
    case ErrorKind::UnsupportedGroup: return "UnsupportedGroup";
  }
  return "Unknown";
}

}  // namespace covercalc
