#include "kmf/error.hpp"

namespace kmf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::DefectiveMatrix: return "DefectiveMatrix";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::RadiusViolation: return "RadiusViolation";
    case ErrorKind::TruncationFailure: return "TruncationFailure";
    case ErrorKind::SingularQShift: return "SingularQShift";
    case ErrorKind::GammaDomainError: return "GammaDomainError";
    case ErrorKind::InvalidReduction: return "InvalidReduction";
    case ErrorKind::NonConvergentQuadrature: return "NonConvergentQuadrature";
    case ErrorKind::IntegrandSingular: return "IntegrandSingular";
    case ErrorKind::GrowthViolation: return "GrowthViolation";
    case ErrorKind::NonDecayingIntegrand: return "NonDecayingIntegrand";
    case ErrorKind::StepTooSmall: return "StepTooSmall";
    case ErrorKind::UnknownIdentity: return "UnknownIdentity";
    case ErrorKind::SamplerExhausted: return "SamplerExhausted";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace kmf
