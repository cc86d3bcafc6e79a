#ifndef JJRB_ERROR_HPP
#define JJRB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace jjrb {

/// Failure categories raised by the library. Input/shape problems map to CLI
/// exit code 2, mathematical failures (violated hypotheses) to exit code 1.
enum class ErrorKind {
  DimensionMismatch,
  ShapeMismatch,
  ContainmentViolation,
  NotRotaBaxter,
  NotAutomorphism,
  AxiomViolation,
  HypothesisNotMet,
  MixedBase,
  NonzeroWeight,
  PrerequisiteFailed,
  UnsupportedDegree,
  ExcludedParameters,
  UnknownId,
  ParseError,
  MissingSection,
};

const char* error_kind_name(ErrorKind kind);

/// True for errors caused by malformed/unusable input rather than by a
/// mathematical hypothesis failing on well-formed input.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace jjrb

#endif
