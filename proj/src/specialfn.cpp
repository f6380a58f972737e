#include "stieltjes/specialfn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <boost/math/special_functions/digamma.hpp>

#include "stieltjes/errors.hpp"
#include "stieltjes/integrator.hpp"

namespace stieltjes {

namespace {

using std::numbers::pi;
constexpr double kEuler = std::numbers::egamma;
constexpr double kTiny = 1e-300;
constexpr double kEps = std::numeric_limits<double>::epsilon();
const cplx kI(0.0, 1.0);

// B_2k / (2k (2k - 1)), k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,   -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0};

[[noreturn]] void domain(const char* what) { throw Error(ErrorKind::DomainError, what); }

bool on_cut(cplx z) { return z.imag() == 0.0 && z.real() <= 0.0; }

// (z + 1/2) log(1 + 1/z) - 1
cplx binet_step(cplx z) {
  const cplx w = 1.0 / z;
  if (std::abs(w) <= 0.25) {
    cplx sum = 0.0;
    cplx wn = w;
    for (int n = 2; n < 60; ++n) {
      wn *= w;
      const cplx term = ((n % 2 == 0) ? 1.0 : -1.0) * (n - 1.0) / (2.0 * n * (n + 1.0)) * wn;
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  return (z + 0.5) * special::log1p(w) - 1.0;
}

bool series_region(cplx z) {
  const double r = std::abs(z);
  return r <= 1.5 || (z.real() < 0.0 && r + z.real() < 8.0);
}

// 1 / (z + 1 - a - 1(1-a) / (z + 3 - a - 2(2-a) / ...)) by modified Lentz.
cplx legendre_cf(double a, cplx z) {
  cplx b = z + 1.0 - a;
  cplx f = b;
  if (std::abs(f) < kTiny) f = kTiny;
  cplx c = f;
  cplx d = 0.0;
  for (int n = 1; n < 20000; ++n) {
    const double an = -n * (n - a);
    b += 2.0;
    d = b + an * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const cplx delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 2.0 * kEps) return 1.0 / f;
  }
  throw Error(ErrorKind::ToleranceNotMet, "incomplete gamma continued fraction did not converge");
}

// Sum_k (-z)^k / (k! (a + k)), k >= k0.
cplx kummer_sum(double a, cplx z, int k0) {
  cplx term = 1.0;
  cplx sum = 0.0;
  for (int k = 1; k < k0; ++k) term *= -z / static_cast<double>(k);
  for (int k = k0; k < 4000; ++k) {
    if (k > 0) term *= -z / static_cast<double>(k);
    const cplx t = term / (a + k);
    sum += t;
    if (k > 2 && std::abs(t) < 1e-17 * std::abs(sum)) return sum;
  }
  throw Error(ErrorKind::ToleranceNotMet, "incomplete gamma series did not converge");
}

bool nonpositive_integer(double a) { return a <= 0.0 && a == std::round(a); }

// Halley iteration on w e^w = z.
cplx lambert_halley(cplx z, cplx w) {
  for (int i = 0; i < 100; ++i) {
    const cplx ew = std::exp(w);
    const cplx f = w * ew - z;
    const cplx wp1 = w + 1.0;
    const cplx step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 4.0 * kEps * std::max(std::abs(w), 1e-300)) break;
  }
  return w;
}

cplx lambert_branch_series(cplx p) {
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
}

IntegrationOptions fine() {
  IntegrationOptions o;
  o.rel_tol = 1e-13;
  o.abs_tol = 0.0;
  return o;
}

}  // namespace

namespace special {

cplx log1p(cplx w) {
  if (std::abs(w) < 0.25) {
    const cplx t = w / (2.0 + w);
    const cplx t2 = t * t;
    cplx sum = 0.0;
    cplx tn = t;
    for (int n = 0; n < 40; ++n) {
      const cplx term = tn / (2.0 * n + 1.0);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      tn *= t2;
    }
    return 2.0 * sum;
  }
  return std::log(1.0 + w);
}

cplx binet(cplx z) {
  if (!(z.real() > 0.0)) domain("binet: needs Re z > 0");
  cplx shift = 0.0;
  cplx x = z;
  while (std::abs(x) < 15.0) {
    shift += binet_step(x);
    x += 1.0;
  }
  const cplx x2 = 1.0 / (x * x);
  cplx s = 0.0;
  for (int k = static_cast<int>(kStirling.size()) - 1; k >= 0; --k) s = s * x2 + kStirling[k];
  return shift + s / x;
}

cplx log_gamma(cplx z) {
  if (!(z.real() > 0.0)) domain("log_gamma: needs Re z > 0");
  return binet(z) + (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi);
}

double digamma(double x) {
  if (x <= 0.0 && x == std::round(x)) domain("digamma: pole");
  return boost::math::digamma(x);
}

cplx upper_gamma_scaled(double a, cplx z) {
  if (on_cut(z)) domain("upper_gamma: z on the cut");
  if (!series_region(z)) return std::pow(z, a) * legendre_cf(a, z);
  if (a == 0.0) return e1_scaled(z);
  if (nonpositive_integer(a)) {
    cplx g = e1_scaled(z);
    for (double k = -1.0; k >= a; k -= 1.0) g = (g - std::pow(z, k)) / k;
    return g;
  }
  const cplx lower = std::pow(z, a) * kummer_sum(a, z, 0);
  return std::exp(z) * (std::tgamma(a) - lower);
}

cplx upper_gamma(double a, cplx z) {
  if (on_cut(z)) domain("upper_gamma: z on the cut");
  if (!series_region(z)) return std::exp(-z) * std::pow(z, a) * legendre_cf(a, z);
  if (a == 0.0) return e1(z);
  if (nonpositive_integer(a)) return std::exp(-z) * upper_gamma_scaled(a, z);
  return std::tgamma(a) - std::pow(z, a) * kummer_sum(a, z, 0);
}

cplx e1(cplx z) {
  if (on_cut(z)) domain("E1: z on the cut");
  if (!series_region(z)) return std::exp(-z) * legendre_cf(0.0, z);
  // -gamma - log z - sum_{k>=1} (-z)^k / (k k!)
  return -kEuler - std::log(z) - kummer_sum(0.0, z, 1);
}

cplx e1_scaled(cplx z) {
  if (on_cut(z)) domain("E1: z on the cut");
  if (!series_region(z)) return legendre_cf(0.0, z);
  return std::exp(z) * e1(z);
}

cplx erfcx(cplx w) {
  if (w.real() > 0.0) return upper_gamma_scaled(0.5, w * w) / std::sqrt(pi);
  return std::exp(w * w) * erfc(w);
}

cplx erfc(cplx w) {
  if (w.imag() == 0.0) return std::erfc(w.real());
  if (w.real() > 0.0) return std::exp(-w * w) * erfcx(w);
  if (w.real() < 0.0) return 2.0 - erfc(-w);
  // Imaginary axis: erf(iy) = i (2/sqrt(pi)) sum y^(2n+1) / (n! (2n+1)).
  const double y = w.imag();
  double term = y;
  double sum = y;
  for (int n = 1; n < 400; ++n) {
    term *= y * y / n;
    const double t = term / (2.0 * n + 1.0);
    sum += t;
    if (std::abs(t) < 1e-17 * std::abs(sum)) break;
  }
  return 1.0 - kI * (2.0 / std::sqrt(pi)) * sum;
}

double ci(double x) {
  if (!(x > 0.0)) domain("ci: needs x > 0");
  return -e1(cplx(0.0, x)).real();
}

double si(double x) {
  if (!(x > 0.0)) domain("si: needs x > 0");
  return e1(cplx(0.0, x)).imag();
}

/// w lies in the image of the principal branch: Re w > -Im w cot(Im w).
bool lambert_principal(cplx w) {
  const double eta = w.imag();
  if (std::abs(eta) >= pi) return false;
  if (std::abs(eta) < 1e-8) return w.real() >= -1.0 - 1e-8;
  return w.real() > -eta / std::tan(eta) - 1e-9 * (1.0 + std::abs(w));
}

cplx lambert_w0(cplx z) {
  if (z == 0.0) return 0.0;
  const double e = std::numbers::e;
  std::vector<cplx> guesses;
  if (std::abs(z + 1.0 / e) < 0.6) guesses.push_back(lambert_branch_series(std::sqrt(2.0 * (e * z + 1.0))));
  if (std::abs(z) < 2.5) guesses.push_back(std::abs(1.0 + z) <= 0.3 ? z : log1p(z));
  if (std::abs(z) > 0.5) {
    const cplx l1 = std::log(z);
    const cplx l2 = std::log(l1);
    guesses.push_back(l1 - l2 + l2 / l1);
  }
  guesses.push_back(cplx(-0.5, 0.0));
  cplx first;
  for (std::size_t i = 0; i < guesses.size(); ++i) {
    const cplx w = lambert_halley(z, guesses[i]);
    if (i == 0) first = w;
    if (lambert_principal(w) && std::abs(w * std::exp(w) - z) <= 1e-12 * std::abs(z)) return w;
  }
  return first;
}

cplx lambert_w0_upper_cut(double t) {
  const double e = std::numbers::e;
  if (!(t > 1.0 / e)) domain("lambert_w0_upper_cut: needs t > 1/e");
  cplx w = e * t - 1.0 < 0.5 ? lambert_branch_series(kI * std::sqrt(2.0 * (e * t - 1.0)))
                             : cplx(std::log(t), pi / 2.0);
  // Damped Newton on w e^w + t = 0, keeping 0 < Im w < pi.
  for (int i = 0; i < 200; ++i) {
    const cplx ew = std::exp(w);
    const cplx step = (w * ew + t) / (ew * (w + 1.0));
    cplx next = w - step;
    double damp = 1.0;
    while ((next.imag() <= 0.0 || next.imag() >= pi) && damp > 1e-6) {
      damp *= 0.5;
      next = w - damp * step;
    }
    w = next;
    if (std::abs(step) <= 4.0 * kEps * std::abs(w)) break;
  }
  return w;
}

cplx lambert_w0_prime(cplx z) {
  if (std::abs(z) < 1e-8) return 1.0 - 2.0 * z + 4.5 * z * z;
  const cplx w = lambert_w0(z);
  return w / (z * (1.0 + w));
}

cplx bessel_k_scaled(double nu, cplx z) {
  if (on_cut(z)) domain("bessel_k: z on the cut");
  nu = std::abs(nu);
  const double mu = nu - 0.5;
  const double q = nu + 0.5;
  // Rotate the ray t = s r off the singularity at t = -2z.
  const double theta = std::abs(std::arg(z)) > pi / 2.0 ? std::copysign(pi / 4.0, z.imag()) : 0.0;
  const cplx r = std::polar(1.0, theta);
  const cplx rmu = std::pow(r, mu);
  const cplx inv2z = 1.0 / (2.0 * z);
  auto body = [&](double s) { return std::exp(-s * r) * std::pow(1.0 + s * r * inv2z, mu); };
  // s in [0, 1] as s = u^(1/q), removing s^mu.
  auto head = [&](double u) -> cplx {
    const double s = std::pow(u, 1.0 / q);
    return body(s) / q;
  };
  // s in [1, inf) as s = 1/v.
  auto tail = [&](double v) -> cplx {
    if (v <= 0.0) return 0.0;
    const double s = 1.0 / v;
    const cplx val = body(s) * std::pow(s, mu) * (s * s);
    return std::isfinite(val.real()) && std::isfinite(val.imag()) ? val : cplx(0.0);
  };
  const double knee = 2.0 * std::abs(z);
  std::vector<double> hb{0.0};
  if (knee < 1.0) {
    for (double f : {0.25, 1.0, 4.0})
      if (knee * f < 1.0) hb.push_back(std::pow(knee * f, q));
  }
  hb.push_back(1.0);
  std::vector<double> tb{0.0};
  if (knee > 1.0) {
    for (double f : {4.0, 1.0, 0.25})
      if (knee * f > 1.0) tb.push_back(1.0 / (knee * f));
  }
  tb.push_back(1.0);
  const cplx integral = integrate_adaptive(head, hb, fine()).value + integrate_adaptive(tail, tb, fine()).value;
  return std::sqrt(pi / (2.0 * z)) * rmu * r * integral / std::tgamma(q);
}

cplx bessel_k(double nu, cplx z) { return std::exp(-z) * bessel_k_scaled(nu, z); }

double bessel_k(double nu, double x) {
  if (!(x > 0.0)) domain("bessel_k: needs x > 0");
  return boost::math::cyl_bessel_k(nu, x);
}

double bessel_j(double nu, double x) {
  if (!(x > 0.0)) domain("bessel_j: needs x > 0");
  return boost::math::cyl_bessel_j(nu, x);
}

double bessel_y(double nu, double x) {
  if (!(x > 0.0)) domain("bessel_y: needs x > 0");
  return boost::math::cyl_neumann(nu, x);
}

double bessel_j_prime(double nu, double x) {
  if (!(x > 0.0)) domain("bessel_j_prime: needs x > 0");
  return boost::math::cyl_bessel_j_prime(nu, x);
}

double bessel_y_prime(double nu, double x) {
  if (!(x > 0.0)) domain("bessel_y_prime: needs x > 0");
  return boost::math::cyl_neumann_prime(nu, x);
}

cplx hyp2f1(double a, double b, double c, cplx w) {
  if (w.imag() == 0.0 && w.real() >= 1.0) domain("hyp2f1: w on [1, inf)");
  if (nonpositive_integer(c)) domain("hyp2f1: c is a non-positive integer");
  if (std::abs(w) < 0.5) {
    cplx term = 1.0;
    cplx sum = 1.0;
    for (int n = 0; n < 2000; ++n) {
      term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * w;
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) return sum;
    }
    throw Error(ErrorKind::ToleranceNotMet, "hyp2f1 series did not converge");
  }
  if (!(c > b && b > 0.0)) {
    if (c > a && a > 0.0) {
      std::swap(a, b);
    } else {
      domain("hyp2f1: integral representation needs c > b > 0");
    }
  }
  const double d = c - b;
  // [0, 1/2] with t = u^(1/b) / 2; the t^(b-1) weight is absorbed.
  auto left = [&](double u) -> cplx {
    const double t = 0.5 * std::pow(u, 1.0 / b);
    return std::pow(1.0 - w * t, -a) * std::pow(1.0 - t, d - 1.0);
  };
  // [1/2, 1] with 1 - t = v^(1/d) / 2.
  auto right = [&](double v) -> cplx {
    const double omt = 0.5 * std::pow(v, 1.0 / d);
    return std::pow(1.0 - w * (1.0 - omt), -a) * std::pow(1.0 - omt, b - 1.0);
  };
  std::vector<double> lb{0.0};
  const double knee = 1.0 / std::abs(w);
  if (knee < 0.5) {
    for (double f : {0.25, 1.0, 4.0})
      if (knee * f < 0.5) lb.push_back(std::pow(2.0 * knee * f, b));
  }
  lb.push_back(1.0);
  std::vector<double> rb{0.0};
  const double gap = std::abs(1.0 - w);
  if (gap < 0.5) {
    for (double f : {0.25, 1.0, 4.0})
      if (gap * f < 0.5) rb.push_back(std::pow(2.0 * gap * f, d));
  }
  rb.push_back(1.0);
  const cplx I = std::pow(0.5, b) / b * integrate_adaptive(left, lb, fine()).value +
                 std::pow(0.5, d) / d * integrate_adaptive(right, rb, fine()).value;
  const double lnorm = std::lgamma(c) - std::lgamma(b) - std::lgamma(d);
  return std::exp(lnorm) * I;
}

double kummer_u(double a, double b, double x) {
  if (!(x > 0.0)) domain("kummer_u: needs x > 0");
  if (!(a > 0.0)) {
    const double a2 = a - b + 1.0;
    if (!(a2 > 0.0)) domain("kummer_u: needs a > 0 or a - b + 1 > 0");
    return std::pow(x, 1.0 - b) * kummer_u(a2, 2.0 - b, x);
  }
  const double e = b - a - 1.0;
  // t in [0, 1] as t = u^(1/a).
  auto head = [&](double u) -> cplx {
    const double t = std::pow(u, 1.0 / a);
    return std::exp(-x * t) * std::pow(1.0 + t, e) / a;
  };
  // t in [1, T] as t = e^s; beyond T = max(1, 40/x) the factor e^(-x t) is negligible.
  const double top = std::log(std::max(1.0, 45.0 / x));
  auto mid = [&](double s) -> cplx {
    const double t = std::exp(s);
    return std::exp(-x * t + a * s) * std::pow(1.0 + t, e);
  };
  std::vector<double> mb{0.0};
  for (double s = 2.0; s < top; s += 2.0) mb.push_back(s);
  mb.push_back(std::max(top, 1e-3));
  IntegrationOptions o = fine();
  o.abs_tol = 1e-300;
  const double val = integrate_adaptive(head, 0.0, 1.0, o).value.real() +
                     integrate_adaptive(mid, mb, o).value.real();
  return val / std::tgamma(a);
}

}  // namespace special

std::string_view to_string(SpecialFunctionId id) noexcept {
  switch (id) {
    case SpecialFunctionId::log_gamma: return "log_gamma";
    case SpecialFunctionId::digamma: return "digamma";
    case SpecialFunctionId::upper_incomplete_gamma: return "upper_incomplete_gamma";
    case SpecialFunctionId::exp_integral_E1: return "exp_integral_E1";
    case SpecialFunctionId::erfc: return "erfc";
    case SpecialFunctionId::cosine_integral_ci: return "cosine_integral_ci";
    case SpecialFunctionId::sine_integral_si: return "sine_integral_si";
    case SpecialFunctionId::bessel_J: return "bessel_J";
    case SpecialFunctionId::bessel_Y: return "bessel_Y";
    case SpecialFunctionId::bessel_K: return "bessel_K";
    case SpecialFunctionId::lambert_W0: return "lambert_W0";
    case SpecialFunctionId::binet_J: return "binet_J";
    case SpecialFunctionId::gauss_2F1: return "gauss_2F1";
  }
  return "unknown";
}

namespace {

double param(std::span<const double> p, std::size_t i, SpecialFunctionId id) {
  if (p.size() <= i)
    throw Error(ErrorKind::BadParameter, std::string(to_string(id)) + ": missing parameter");
  return p[i];
}

double positive_real(cplx z, SpecialFunctionId id) {
  if (z.imag() != 0.0 || !(z.real() > 0.0))
    throw Error(ErrorKind::DomainError, std::string(to_string(id)) + ": needs a positive real argument");
  return z.real();
}

}  // namespace

SpecialValue eval_special_flagged(SpecialFunctionId id, std::span<const double> p, cplx z) {
  using namespace special;
  SpecialValue out;
  switch (id) {
    case SpecialFunctionId::log_gamma:
      out.value = log_gamma(z);
      out.accuracy_loss = std::abs(z - 1.0) < 1e-3 || std::abs(z - 2.0) < 1e-3;
      break;
    case SpecialFunctionId::digamma: {
      if (z.imag() != 0.0) domain("digamma: real argument only");
      out.value = digamma(z.real());
      out.accuracy_loss = std::abs(z.real() - 1.4616321449683623) < 1e-3;
      break;
    }
    case SpecialFunctionId::upper_incomplete_gamma: {
      const double a = param(p, 0, id);
      out.value = upper_gamma(a, z);
      out.accuracy_loss = std::abs(a) < 1e-2 && series_region(z);
      break;
    }
    case SpecialFunctionId::exp_integral_E1:
      out.value = e1(z);
      out.accuracy_loss = z.real() > 700.0;
      break;
    case SpecialFunctionId::erfc:
      out.value = erfc(z);
      out.accuracy_loss = std::abs(out.value) < 1e-300;
      break;
    case SpecialFunctionId::cosine_integral_ci:
      out.value = ci(positive_real(z, id));
      out.accuracy_loss = std::abs(out.value) < 1e-3;
      break;
    case SpecialFunctionId::sine_integral_si:
      out.value = si(positive_real(z, id));
      out.accuracy_loss = std::abs(out.value) < 1e-3;
      break;
    case SpecialFunctionId::bessel_J:
      out.value = bessel_j(param(p, 0, id), positive_real(z, id));
      out.accuracy_loss = std::abs(out.value) < 1e-3;
      break;
    case SpecialFunctionId::bessel_Y:
      out.value = bessel_y(param(p, 0, id), positive_real(z, id));
      out.accuracy_loss = std::abs(out.value) < 1e-3;
      break;
    case SpecialFunctionId::bessel_K:
      out.value = bessel_k(param(p, 0, id), z);
      break;
    case SpecialFunctionId::lambert_W0:
      out.value = lambert_w0(z);
      out.accuracy_loss = std::abs(z + 1.0 / std::numbers::e) < 1e-3;
      break;
    case SpecialFunctionId::binet_J:
      out.value = binet(z);
      break;
    case SpecialFunctionId::gauss_2F1:
      out.value = hyp2f1(param(p, 0, id), param(p, 1, id), param(p, 2, id), z);
      out.accuracy_loss = std::abs(1.0 - z) < 1e-3;
      break;
  }
  return out;
}

cplx eval_special(SpecialFunctionId id, std::span<const double> p, cplx z) {
  return eval_special_flagged(id, p, z).value;
}

}  // namespace stieltjes
