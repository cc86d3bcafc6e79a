#include "jjrb/error.hpp"

namespace jjrb {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ContainmentViolation: return "ContainmentViolation";
    case ErrorKind::NotRotaBaxter: return "NotRotaBaxter";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::MixedBase: return "MixedBase";
    case ErrorKind::NonzeroWeight: return "NonzeroWeight";
    case ErrorKind::PrerequisiteFailed: return "PrerequisiteFailed";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::ExcludedParameters: return "ExcludedParameters";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MissingSection: return "MissingSection";
  }
  return "Error";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::MissingSection:
    case ErrorKind::UnsupportedDegree:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::UnknownId:
    case ErrorKind::ExcludedParameters:
      return true;
    default:
      return false;
  }
}

}  // namespace jjrb
