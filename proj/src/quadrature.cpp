#include "stieltjes/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "stieltjes/errors.hpp"

namespace stieltjes {

namespace {

constexpr int kMaxRichardson = 14;
constexpr int kMinCycles = 4;

bool near_integer(double q) { return std::abs(q - std::round(q)) < 1e-9; }

IntegrationOptions options_for(double rel_tol) {
  if (!(rel_tol >= 1e-14 && rel_tol <= 1e-4))
    throw Error(ErrorKind::BadParameter, "rel_tol must lie in [1e-14, 1e-4]");
  IntegrationOptions o;
  o.rel_tol = rel_tol;
  o.abs_tol = kDefaultAbsTol;
  return o;
}

// [a, b] with the integrand behaving like (zeta - a)^q at a.
QuadResult first_panel(const std::function<cplx(double)>& f, double a, double b, double q,
                       const IntegrationOptions& o) {
  if (q >= 20.0 || near_integer(q)) return integrate_adaptive(f, a, b, o);
  const double len = b - a;
  const double e = 1.0 / (1.0 + q);
  auto g = [&](double s) -> cplx {
    const double zeta = a + len * std::pow(s, e);
    if (!(zeta > a)) return 0.0;
    return f(zeta) * (len * e * std::pow(s, e - 1.0));
  };
  return integrate_adaptive(g, 0.0, 1.0, o);
}

// [b, inf) with the integrand decaying like zeta^(-p), p > 1.
QuadResult tail_panel(const std::function<cplx(double)>& f, double b, double p,
                      const IntegrationOptions& o) {
  const double kappa = std::min(p - 1.0, 1.0);
  auto g = [&](double s) -> cplx {
    const double zeta = b * std::pow(s, -1.0 / kappa);
    if (!std::isfinite(zeta)) return 0.0;
    const cplx v = f(zeta) * (zeta / (kappa * s));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return 0.0;
    return v;
  };
  return integrate_adaptive(g, 0.0, 1.0, o);
}

// Oscillatory tail in u = zeta^(1/k): blocks [U0 2^(j-1), U0 2^j] summed and
// extrapolated in h = 1/U, assuming a remainder expansion in powers
// p1, p1 + 1, ... of h at phase-aligned cycle boundaries.
QuadResult oscillatory_tail(const std::function<cplx(double)>& f, double u0, Oscillation osc,
                            double p1, const IntegrationOptions& o) {
  const int k = osc.root;
  auto g = [&](double u) -> cplx {
    const double zeta = std::pow(u, k);
    return f(zeta) * (k * std::pow(u, k - 1));
  };
  QuadResult out;
  out.value = 0.0;
  std::vector<std::vector<cplx>> table;
  cplx partial = 0.0;
  double lo = u0;
  for (int j = 0; j <= kMaxRichardson; ++j) {
    if (j > 0) {
      const double hi = 2.0 * lo;
      const int cycles = static_cast<int>(std::lround((hi - lo) / osc.period));
      std::vector<double> br;
      const int stride = std::max(1, cycles / 512);
      for (int c = 0; c <= cycles; c += stride) br.push_back(lo + c * osc.period);
      if (br.back() < hi) br.push_back(hi);
      IntegrationOptions bo = o;
      bo.max_panels = std::max(o.max_panels, static_cast<int>(br.size()) * 4);
      const QuadResult blk = integrate_adaptive(g, br, bo);
      partial += blk.value;
      out.err_estimate += blk.err_estimate;
      out.subdivisions += blk.subdivisions;
      out.converged = out.converged && blk.converged;
      lo = hi;
    }
    std::vector<cplx> row{partial};
    for (int m = 1; m <= j; ++m) {
      const double r = std::pow(2.0, p1 + m - 1);
      row.push_back((r * row[m - 1] - table[j - 1][m - 1]) / (r - 1.0));
    }
    table.push_back(std::move(row));
    if (j >= 3) {
      const cplx now = table[j][j];
      const double diff = std::min(std::abs(now - table[j - 1][j - 1]),
                                   std::abs(now - table[j][j - 1]));
      if (diff <= std::max(o.abs_tol, 0.5 * o.rel_tol * std::abs(now))) {
        out.value = now;
        out.err_estimate += diff;
        return out;
      }
    }
  }
  const int last = static_cast<int>(table.size()) - 1;
  out.value = table[last][last];
  out.err_estimate += std::abs(table[last][last] - table[last - 1][last - 1]);
  out.converged = false;
  return out;
}

}  // namespace

CutPlanePoint::CutPlanePoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im))
    throw Error(ErrorKind::CutPlaneViolation, "non-finite point");
  if (im == 0.0 && re <= 0.0)
    throw Error(ErrorKind::CutPlaneViolation, "point lies on the cut (-inf, 0]");
}

QuadResult integrate_density(const Density& phi, const std::function<cplx(double)>& kernel,
                             double origin_exp, double tail_exp, double scale_hint,
                             const IntegrationOptions& options) {
  QuadResult total;
  if (phi.vanishes()) return total;
  const Support s = phi.support();
  const double lo = s.lo;
  const double q = phi.p0() + (lo == 0.0 ? origin_exp : 0.0);
  if (q <= -1.0) throw Error(ErrorKind::DivergentIntegral, "integrand not integrable at the left end");
  const bool has_tail = !std::isfinite(s.hi);
  const double p_tail = phi.delta() + tail_exp;
  if (has_tail && p_tail <= 1.0)
    throw Error(ErrorKind::DivergentIntegral, "integrand not integrable at infinity");

  auto f = [&](double zeta) -> cplx { return phi.raw(zeta) * kernel(zeta); };

  const double scale = std::max(scale_hint, 1e-300);
  std::vector<double> pts{lo};
  double end = s.hi;
  std::optional<Oscillation> osc = has_tail ? phi.oscillation() : std::nullopt;
  double u0 = 0.0;
  if (has_tail) {
    end = std::max({2.0 * std::max(1.0, scale), 2.0 * lo, 1.0});
    if (osc) {
      const double need = std::pow(end, 1.0 / osc->root) / osc->period;
      const double cycles = std::max<double>(kMinCycles, std::ceil(need));
      u0 = cycles * osc->period;
      end = std::pow(u0, osc->root);
    }
  }
  for (double x : {std::min(1.0, scale), std::max(1.0, scale)})
    if (x > lo && x < end && x > pts.back() * (1.0 + 1e-12)) pts.push_back(x);
  if (osc) {
    const double ustart = std::pow(pts.back(), 1.0 / osc->root);
    const int first = static_cast<int>(std::floor(ustart / osc->period)) + 1;
    const int last = static_cast<int>(std::lround(u0 / osc->period)) - 1;
    for (int c = first; c <= last; ++c) pts.push_back(std::pow(c * osc->period, osc->root));
  }
  pts.push_back(end);

  // The first panel gets the endpoint substitution; the rest are regular.
  total += first_panel(f, pts[0], pts[1], q, options);
  if (pts.size() > 2) {
    std::vector<double> rest(pts.begin() + 1, pts.end());
    total += integrate_adaptive(f, rest, options);
  }
  if (has_tail) {
    if (osc) {
      const double p1 = osc->root * (p_tail - 1.0);
      total += oscillatory_tail(f, u0, *osc, p1, options);
    } else {
      total += tail_panel(f, end, p_tail, options);
    }
  }
  total.converged = total.converged &&
                    total.err_estimate <= std::max(options.abs_tol,
                                                   2.0 * options.rel_tol * std::abs(total.value));
  return total;
}

QuadResult stieltjes_transform(const Density& phi, CutPlanePoint z, double rel_tol) {
  const IntegrationOptions o = options_for(rel_tol);
  const cplx zz = z.value();
  return integrate_density(
      phi, [zz](double zeta) { return 1.0 / (zeta + zz); }, 0.0, 1.0, std::abs(zz), o);
}

ExtendedReal mass_over_zeta(const Density& phi, double rel_tol) {
  const IntegrationOptions o = options_for(rel_tol);
  if (phi.vanishes()) return ExtendedReal::finite(0.0);
  if (phi.support().lo == 0.0 && phi.p0() <= 0.0) return ExtendedReal::infinity();
  const QuadResult r = integrate_density(
      phi, [](double zeta) { return cplx(1.0 / zeta); }, -1.0, 1.0, 1.0, o);
  return ExtendedReal::finite(r.value.real(), r.err_estimate, r.converged);
}

ExtendedReal total_mass(const Density& phi, double rel_tol) {
  const IntegrationOptions o = options_for(rel_tol);
  if (phi.vanishes()) return ExtendedReal::finite(0.0);
  if (std::isinf(phi.support().hi) && phi.delta() <= 1.0) return ExtendedReal::infinity();
  const QuadResult r =
      integrate_density(phi, [](double) { return cplx(1.0); }, 0.0, 0.0, 1.0, o);
  return ExtendedReal::finite(r.value.real(), r.err_estimate, r.converged);
}

bool decay_check(const std::function<double(double)>& g) {
  constexpr int kPoints = 61;
  std::array<double, kPoints> v{};
  for (int i = 0; i < kPoints; ++i) {
    v[i] = std::abs(g(std::pow(10.0, 6.0 * i / (kPoints - 1))));
    if (!std::isfinite(v[i])) return false;
  }
  for (int i = kPoints / 2; i + 1 < kPoints; ++i)
    if (v[i + 1] > v[i] * (1.0 + 1e-9)) return false;
  return v[kPoints - 1] <= 1e-3 * v[0] * (1.0 + 1e-9);
}

}  // namespace stieltjes
