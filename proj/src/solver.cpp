#include "stieltjes/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "stieltjes/errors.hpp"

namespace stieltjes {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_b(double b) {
  if (!(b >= 0.0) || !std::isfinite(b)) throw Error(ErrorKind::BadParameter, "b must be >= 0");
}

bool bound_holds(const Classification& cls, double x) {
  return x > 0.0 && (!std::isfinite(cls.hi) || x < cls.hi);
}

// Wraps S[phi](x) - b x - c and remembers any quadrature that missed tolerance.
struct RealResidual {
  const Density* phi;
  double b;
  double c;
  double rel_tol;
  mutable bool all_converged = true;

  double operator()(double x) const {
    const QuadResult r = stieltjes_transform(*phi, CutPlanePoint(x), rel_tol);
    all_converged = all_converged && r.converged;
    return r.value.real() - b * x - c;
  }
};

SolveReport no_root(const Classification& cls, const ExtendedReal& critical) {
  SolveReport rep;
  rep.classification = cls;
  rep.critical_value = critical;
  return rep;
}

// (g(z) - g(a)) / (z - a) for z near a, as a trapezoid sum of the Cauchy
// integral over the circle |zeta - a| = a/4.
cplx divided_difference(const std::function<cplx(cplx)>& g, double a, cplx z) {
  constexpr int n = 32;
  const double r = 0.25 * a;
  cplx sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx zeta = a + std::polar(r, 2.0 * std::numbers::pi * (k + 0.5) / n);
    sum += g(zeta) / (zeta - z);
  }
  return sum / static_cast<double>(n);
}

}  // namespace

std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::NoSolution: return "NoSolution";
    case Outcome::UniqueRoot: return "UniqueRoot";
    case Outcome::Degenerate: return "Degenerate";
  }
  return "?";
}

std::string_view to_string(Reason r) noexcept {
  switch (r) {
    case Reason::none: return "none";
    case Reason::m_nonpositive: return "m_nonpositive";
    case Reason::c_nonpositive_b_zero: return "c_nonpositive_b_zero";
    case Reason::c_exceeds_mass: return "c_exceeds_mass";
    case Reason::zero_density_zero_b: return "zero_density_zero_b";
  }
  return "?";
}

Classification classify(const ExtendedReal& mz, double b, double c) {
  check_b(b);
  Classification cls;
  const ExtendedReal m = mz.minus(c);
  if (b > 0.0) {
    if (!m.is_positive()) {
      cls.reason = Reason::m_nonpositive;
      return cls;
    }
    cls.outcome = Outcome::UniqueRoot;
    cls.hi = m.is_infinite() ? kInf : m.value() / b;
    return cls;
  }
  if (!(c > 0.0)) {
    cls.reason = Reason::c_nonpositive_b_zero;
    return cls;
  }
  if (!m.is_positive()) {
    cls.reason = Reason::c_exceeds_mass;
    return cls;
  }
  cls.outcome = Outcome::UniqueRoot;
  return cls;
}

SolveReport solve_real(const std::function<double(double)>& F, const Classification& cls,
                       double tol_res, const SolveOptions& options) {
  if (cls.outcome != Outcome::UniqueRoot)
    throw Error(ErrorKind::BadParameter, "solve_real needs a UniqueRoot classification");
  SolveReport rep;
  rep.classification = cls;
  int evals = 0;
  auto f = [&](double x) {
    ++evals;
    return F(x);
  };

  double lo = 0.0, hi = 0.0, flo = 0.0, fhi = 0.0;
  if (std::isfinite(cls.hi)) {
    lo = options.bracket_inset * cls.hi;
    hi = cls.hi * (1.0 - options.bracket_inset);
    flo = f(lo);
    while (flo <= 0.0 && lo > 1e-300) {
      lo *= 1e-3;
      flo = f(lo);
    }
    fhi = f(hi);
    if (fhi >= 0.0) {
      // Residual noise at the bound; the root sits in [hi, cls.hi).
      rep.root = hi;
      rep.residual = fhi;
      rep.iterations = evals;
      rep.tolerance_met = std::abs(fhi) <= tol_res;
      rep.bound_ok = bound_holds(cls, hi);
      return rep;
    }
  } else {
    double x = 1.0;
    double fx = f(x);
    if (fx > 0.0) {
      while (fx > 0.0) {
        lo = x;
        flo = fx;
        x *= 2.0;
        if (x > options.expansion_cap)
          throw Error(ErrorKind::BracketFailure, "no sign change below the expansion cap");
        fx = f(x);
      }
      hi = x;
      fhi = fx;
    } else {
      while (fx <= 0.0) {
        hi = x;
        fhi = fx;
        x *= 0.5;
        if (x < 1.0 / options.expansion_cap)
          throw Error(ErrorKind::BracketFailure, "no sign change above the contraction cap");
        fx = f(x);
      }
      lo = x;
      flo = fx;
    }
  }
  if (!(flo > 0.0)) throw Error(ErrorKind::BracketFailure, "residual not positive near zero");

  // Bisection.
  while (hi - lo > 1e-13 * (1.0 + lo)) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) {
      lo = hi = mid;
      flo = fhi = 0.0;
      break;
    }
    if (fm > 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  double x = std::abs(flo) <= std::abs(fhi) ? lo : hi;
  double fx = x == lo ? flo : fhi;

  // Secant polish, kept only while it stays in the bracket and improves.
  if (options.polish && lo < hi) {
    double x0 = lo, f0 = flo, x1 = hi, f1 = fhi;
    for (int i = 0; i < 4 && f1 != f0; ++i) {
      const double xn = x1 - f1 * (x1 - x0) / (f1 - f0);
      if (!(xn > lo && xn < hi)) break;
      const double fn = f(xn);
      if (std::abs(fn) < std::abs(fx)) {
        x = xn;
        fx = fn;
      }
      x0 = x1;
      f0 = f1;
      x1 = xn;
      f1 = fn;
      if (fn == 0.0) break;
    }
  }

  rep.root = x;
  rep.residual = fx;
  rep.iterations = evals;
  rep.tolerance_met = std::abs(fx) <= tol_res;
  rep.bound_ok = bound_holds(cls, x);
  return rep;
}

SolveReport solve_equation(const Density& phi, double b, double c, double rel_tol,
                           const SolveOptions& options) {
  check_b(b);
  if (!std::isfinite(c)) throw Error(ErrorKind::BadParameter, "c must be finite");
  const ExtendedReal mz = mass_over_zeta(phi, rel_tol);
  const ExtendedReal critical = mz.minus(c);
  if (phi.vanishes() && b == 0.0 && c == 0.0) {
    Classification cls;
    cls.outcome = Outcome::Degenerate;
    cls.reason = Reason::zero_density_zero_b;
    return no_root(cls, critical);
  }
  const Classification cls = classify(mz, b, c);
  if (cls.outcome != Outcome::UniqueRoot) {
    SolveReport rep = no_root(cls, critical);
    rep.tolerance_met = mz.tolerance_met();
    return rep;
  }
  RealResidual F{&phi, b, c, rel_tol};
  SolveReport rep = solve_real(std::cref(F), cls, 1e-10 * (1.0 + std::abs(c)), options);
  rep.critical_value = critical;
  rep.tolerance_met = rep.tolerance_met && F.all_converged && mz.tolerance_met();
  return rep;
}

SolveReport solve_corollary_form(const Density& phi, TransformKind form, double b, double c,
                                 double rel_tol) {
  check_b(b);
  const Density t = apply_transform(phi, form);
  if (form.tag != TransformTag::T2) return solve_equation(t, b, c, rel_tol);
  // z g(z) + b z - c = 0  <=>  S[T2 phi](z) - b z - (M - c) = 0 with M = int phi.
  const ExtendedReal mass = total_mass(phi, rel_tol);
  if (mass.is_infinite()) throw Error(ErrorKind::InfiniteMass, "T2 needs a finite total mass");
  SolveReport rep = solve_equation(t, b, mass.value() - c, rel_tol);
  rep.critical_value = ExtendedReal::finite(c);
  if (rep.classification.outcome == Outcome::UniqueRoot && b > 0.0) {
    rep.classification.hi = c / b;
    if (rep.root) rep.bound_ok = bound_holds(rep.classification, *rep.root);
  }
  return rep;
}

SolveReport solve_composed(const Density& phi, std::span<const TransformKind> chain, double b,
                           double c, double rel_tol) {
  return solve_equation(compose_transforms(phi, chain), b, c, rel_tol);
}

cplx corollary_stieltjes_part(TransformKind form, const std::function<cplx(cplx)>& g,
                              double total_mass, cplx z) {
  const double a = form.a;
  const cplx i(0.0, 1.0);
  switch (form.tag) {
    case TransformTag::T0: return g(z);
    case TransformTag::T1: return g(a * z);
    case TransformTag::T2: return total_mass - z * g(z);
    case TransformTag::T3:
      if (std::abs(z - a) <= 1e-4 * a) return -divided_difference(g, a, z);
      return (g(a) - g(z)) / (z - a);
    case TransformTag::T4: return g(a / z) / z;
    case TransformTag::T5: {
      const cplx r = std::sqrt(z);
      return g(i * r) + g(-i * r);
    }
  }
  throw Error(ErrorKind::BadParameter, "unknown transform");
}

OffAxisReport verify_no_offaxis_roots(const Density& phi, double b, double c, int samples,
                                      std::uint32_t seed) {
  check_b(b);
  (void)c;
  OffAxisReport rep;
  if (phi.vanishes()) {
    rep.vacuous = true;
    return rep;
  }
  if (samples < 100) throw Error(ErrorKind::BadParameter, "need at least 100 samples");
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> logr(std::log(0.05), std::log(20.0));
  std::uniform_real_distribution<double> ang(-0.95 * std::numbers::pi, 0.95 * std::numbers::pi);
  while (rep.samples < samples) {
    const cplx z = std::polar(std::exp(logr(gen)), ang(gen));
    if (std::abs(z.imag()) < 0.01) continue;
    const double v = stieltjes_transform(phi, CutPlanePoint(z)).value.imag() - b * z.imag();
    ++rep.samples;
    rep.min_magnitude = std::min(rep.min_magnitude, std::abs(v));
    if (v == 0.0 || std::signbit(v) == std::signbit(z.imag())) {
      ++rep.violations;
      rep.violating.push_back(z);
    }
  }
  return rep;
}

}  // namespace stieltjes
