#pragma once

#include <stdexcept>
#include <string>

namespace pushsum {

enum class ErrorKind {
  InvalidParameters,
  InvalidGraph,
  GenerationFailure,
  InvalidInput,
  NumericalFailure,
  DimensionMismatch,
  TooLarge,
  InvalidSpectrum,
  WeightUnderflow,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Exception carrying a machine-readable category alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::InvalidGraph: return "invalid-graph";
    case ErrorKind::GenerationFailure: return "generation-failure";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::NumericalFailure: return "numerical-failure";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::InvalidSpectrum: return "invalid-spectrum";
    case ErrorKind::WeightUnderflow: return "weight-underflow";
    case ErrorKind::Parse: return "parse-error";
  }
  return "unknown";
}

}  // namespace pushsum
