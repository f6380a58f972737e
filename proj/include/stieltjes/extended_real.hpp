#pragma once

#include <string>

namespace stieltjes {

/// A finite real (with its quadrature error estimate) or +infinity.
///
/// Infinite values come from the symbolic divergence rules on density
/// metadata, never from a numerical blow-up.
class ExtendedReal {
 public:
  static ExtendedReal infinity() noexcept { return ExtendedReal(true, 0.0, 0.0, true); }
  static ExtendedReal finite(double value, double error = 0.0, bool tolerance_met = true) noexcept {
    return ExtendedReal(false, value, error, tolerance_met);
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  /// Throws std::logic_error when infinite.
  double value() const;
  double error() const noexcept { return error_; }
  bool tolerance_met() const noexcept { return tolerance_met_; }

  /// m - c, keeping +infinity.
  ExtendedReal minus(double c) const noexcept;

  bool is_positive() const noexcept { return infinite_ || value_ > 0.0; }

  /// "inf" or the shortest round-trip decimal form.
  std::string to_string() const;

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) noexcept {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

 private:
  ExtendedReal(bool infinite, double value, double error, bool tolerance_met) noexcept
      : infinite_(infinite), value_(value), error_(error), tolerance_met_(tolerance_met) {}

  bool infinite_;
  double value_;
  double error_;
  bool tolerance_met_;
};

}  // namespace stieltjes
