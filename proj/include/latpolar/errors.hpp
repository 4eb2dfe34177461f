#pragma once

#include <stdexcept>
#include <string>

namespace latpolar {

// Failure stages surfaced by the library. The names double as the machine
// readable "stage" field of CLI error reports.
enum class ErrorKind {
  DimensionMismatch,
  Empty,
  EmptyDomain,
  LowerDimensional,
  NotFullDimensional,
  OriginNotInterior,
  VerticalFacet,
  NonIntegerCoefficient,
  NotConvex,
  NotCentrallySymmetric,
  Unbounded,
  LambdaUndefined,
  GenerationExhausted,
  InvalidInput,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace latpolar
