#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stieltjes {

enum class ErrorKind {
  RejectedDensity,
  InfiniteMass,
  BadParameter,
  DivergentIntegral,
  ToleranceNotMet,
  BracketFailure,
  DomainError,
  NotFound,
  TierMismatch,
  NoClaim,
  CutPlaneViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `stage` is set when the error comes
/// out of one step of a transform chain.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<int> stage = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<int> stage() const noexcept { return stage_; }
  /// The message without the kind/stage prefix.
  const std::string& detail() const noexcept { return detail_; }

  /// True for failures of the numerics rather than of the caller's input.
  bool is_numerical() const noexcept {
    return kind_ == ErrorKind::ToleranceNotMet || kind_ == ErrorKind::BracketFailure;
  }

 private:
  ErrorKind kind_;
  std::optional<int> stage_;
  std::string detail_;
};

}  // namespace stieltjes
