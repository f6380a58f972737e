#pragma once

#include <complex>
#include <span>
#include <string_view>

namespace stieltjes {

using cplx = std::complex<double>;

enum class SpecialFunctionId {
  log_gamma,
  digamma,
  upper_incomplete_gamma,
  exp_integral_E1,
  erfc,
  cosine_integral_ci,
  sine_integral_si,
  bessel_J,
  bessel_Y,
  bessel_K,
  lambert_W0,
  binet_J,
  gauss_2F1,
};

std::string_view to_string(SpecialFunctionId id) noexcept;

struct SpecialValue {
  cplx value;
  /// Set near zeros and branch points where the relative accuracy target
  /// is not guaranteed.
  bool accuracy_loss = false;
};

/// Uniform entry point. params: upper_incomplete_gamma {a}; bessel_J/Y/K {nu};
/// gauss_2F1 {a, b, c}; none otherwise. Throws DomainError outside the
/// declared domain of each function.
cplx eval_special(SpecialFunctionId id, std::span<const double> params, cplx z);
SpecialValue eval_special_flagged(SpecialFunctionId id, std::span<const double> params, cplx z);

namespace special {

cplx log1p(cplx w);

/// Binet's function J(z) = log Gamma(z) - (z - 1/2) log z + z - log sqrt(2 pi), Re z > 0.
cplx binet(cplx z);
/// Principal log Gamma, Re z > 0.
cplx log_gamma(cplx z);
double digamma(double x);

/// Gamma(a, z) and e^z Gamma(a, z) for real a and z off (-inf, 0].
cplx upper_gamma(double a, cplx z);
cplx upper_gamma_scaled(double a, cplx z);
cplx e1(cplx z);
cplx e1_scaled(cplx z);

cplx erfc(cplx w);
/// e^(w^2) erfc(w).
cplx erfcx(cplx w);

/// Ci(x) and si(x) = Si(x) - pi/2, x > 0.
double ci(double x);
double si(double x);

/// Principal branch. On the cut (-inf, -1/e) the sign of the imaginary zero
/// selects the side.
cplx lambert_w0(cplx z);
/// W0(-t + i0) for t > 1/e: the branch value with Im in (0, pi).
cplx lambert_w0_upper_cut(double t);
cplx lambert_w0_prime(cplx z);

/// K_nu(z) for real nu and z off (-inf, 0]; the scaled form is e^z K_nu(z).
cplx bessel_k(double nu, cplx z);
cplx bessel_k_scaled(double nu, cplx z);
double bessel_k(double nu, double x);
double bessel_j(double nu, double x);
double bessel_y(double nu, double x);
double bessel_j_prime(double nu, double x);
double bessel_y_prime(double nu, double x);

/// 2F1(a, b; c; w) off [1, inf); needs |w| < 1/2 or c > b > 0 or c > a > 0.
cplx hyp2f1(double a, double b, double c, cplx w);

/// Tricomi U(a, b, x), x > 0, via the Laplace integral (a > 0) or Kummer's
/// transformation.
double kummer_u(double a, double b, double x);

}  // namespace special
}  // namespace stieltjes
