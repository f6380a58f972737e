#pragma once

// Globally adaptive Gauss-Kronrod (10/21-point) integration of complex-valued
// integrands over finite intervals. This is the engine under the Stieltjes
// quadrature and under the integral representations in specialfn.

#include <complex>
#include <functional>
#include <span>

namespace stieltjes {

using cplx = std::complex<double>;

struct IntegrationOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  /// Maximum number of panels alive at once; hitting it clears `converged`.
  int max_panels = 2000;
};

struct QuadResult {
  cplx value{0.0, 0.0};
  double err_estimate = 0.0;
  int subdivisions = 0;
  bool converged = true;

  QuadResult& operator+=(const QuadResult& other) noexcept {
    value += other.value;
    err_estimate += other.err_estimate;
    subdivisions += other.subdivisions;
    converged = converged && other.converged;
    return *this;
  }
};

using ComplexIntegrand = std::function<cplx(double)>;

/// Integrates f over [breaks.front(), breaks.back()], starting from the panels
/// given by consecutive breakpoints (at least two, increasing). The integrand
/// is never evaluated at a breakpoint.
QuadResult integrate_adaptive(const ComplexIntegrand& f, std::span<const double> breaks,
                              const IntegrationOptions& options = {});

/// Convenience overload for a single interval.
QuadResult integrate_adaptive(const ComplexIntegrand& f, double a, double b,
                              const IntegrationOptions& options = {});

/// One fixed 21-point Kronrod panel plus its embedded 10-point Gauss value.
struct KronrodPanel {
  cplx kronrod;
  cplx gauss;
  double error;
};
KronrodPanel kronrod21(const ComplexIntegrand& f, double a, double b);

}  // namespace stieltjes
