#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmf {

enum class ErrorKind {
  InvalidInput,
  EigenFailure,
  DefectiveMatrix,
  DomainError,
  SingularMatrix,
  NonCommuting,
  RadiusViolation,
  TruncationFailure,
  SingularQShift,
  GammaDomainError,
  InvalidReduction,
  NonConvergentQuadrature,
  IntegrandSingular,
  GrowthViolation,
  NonDecayingIntegrand,
  StepTooSmall,
  UnknownIdentity,
  SamplerExhausted,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kmf
