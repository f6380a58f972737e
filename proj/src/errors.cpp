#include "stieltjes/errors.hpp"

namespace stieltjes {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::RejectedDensity: return "RejectedDensity";
    case ErrorKind::InfiniteMass: return "InfiniteMass";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::DivergentIntegral: return "DivergentIntegral";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::TierMismatch: return "TierMismatch";
    case ErrorKind::NoClaim: return "NoClaim";
    case ErrorKind::CutPlaneViolation: return "CutPlaneViolation";
  }
  return "Unknown";
}

namespace {
std::string decorate(ErrorKind kind, const std::string& message, std::optional<int> stage) {
  std::string out(to_string(kind));
  if (stage) out += " at stage " + std::to_string(*stage);
  out += ": ";
  out += message;
  return out;
}
}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<int> stage)
    : std::runtime_error(decorate(kind, message, stage)), kind_(kind), stage_(stage), detail_(message) {}

}  // namespace stieltjes
