#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radii {

enum class ErrorKind {
  DependentInput,
  DimensionMismatch,
  NotUnit,
  BadDimension,
  DegenerateAfterRetries,
  NotFullDimensional,
  Infeasible,
  Unbounded,
  EmptyBody,
  TooFewPoints,
  NotCentered,
  UnsupportedDimension,
  DiscNotContained,
  NotSymmetric,
  CertificateFailed,
  InvalidTriple,
  OutOfDomain,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

class RadiiError : public std::runtime_error {
 public:
  RadiiError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw RadiiError(kind, what); }

}  // namespace radii
