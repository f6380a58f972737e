#pragma once

#include <complex>
#include <functional>

#include "stieltjes/density.hpp"
#include "stieltjes/extended_real.hpp"
#include "stieltjes/integrator.hpp"

namespace stieltjes {

inline constexpr double kDefaultRelTol = 1e-10;
inline constexpr double kDefaultAbsTol = 1e-14;

/// A point of the complex plane cut along (-inf, 0].
class CutPlanePoint {
 public:
  /// Throws CutPlaneViolation for im == 0 and re <= 0, or non-finite input.
  CutPlanePoint(double re, double im = 0.0);
  explicit CutPlanePoint(cplx z) : CutPlanePoint(z.real(), z.imag()) {}

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  cplx value() const noexcept { return {re_, im_}; }

 private:
  double re_;
  double im_;
};

/// S[phi](z) = int phi(zeta) / (zeta + z) dzeta. A tolerance miss is reported
/// through QuadResult::converged, not thrown.
QuadResult stieltjes_transform(const Density& phi, CutPlanePoint z, double rel_tol = kDefaultRelTol);

/// int phi(zeta) / zeta dzeta; +inf decided from the metadata.
ExtendedReal mass_over_zeta(const Density& phi, double rel_tol = kDefaultRelTol);

/// int phi(zeta) dzeta; +inf iff delta <= 1.
ExtendedReal total_mass(const Density& phi, double rel_tol = kDefaultRelTol);

/// Checks that g decays to zero along a geometric grid on [1, 1e6]: monotone
/// tail and |g(1e6)| <= 1e-3 |g(1)|.
bool decay_check(const std::function<double(double)>& g);

/// int phi(zeta) k(zeta) dzeta for a kernel behaving like zeta^origin_exp at 0
/// and zeta^(-tail_exp) at infinity. Used for the critical integrals and by
/// anything that needs other moments of a density.
QuadResult integrate_density(const Density& phi, const std::function<cplx(double)>& kernel,
                             double origin_exp, double tail_exp, double scale_hint,
                             const IntegrationOptions& options);

}  // namespace stieltjes
