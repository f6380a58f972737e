#include "stieltjes/extended_real.hpp"

#include <charconv>
#include <stdexcept>

namespace stieltjes {

double ExtendedReal::value() const {
  if (infinite_) throw std::logic_error("ExtendedReal::value() on +inf");
  return value_;
}

ExtendedReal ExtendedReal::minus(double c) const noexcept {
  if (infinite_) return *this;
  return ExtendedReal(false, value_ - c, error_, tolerance_met_);
}

std::string ExtendedReal::to_string() const {
  if (infinite_) return "inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value_);
  if (ec != std::errc()) return std::to_string(value_);
  return std::string(buf, end);
}

}  // namespace stieltjes
