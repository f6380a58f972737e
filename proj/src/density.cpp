#include "stieltjes/density.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "stieltjes/errors.hpp"

namespace stieltjes {

namespace {

constexpr int kAuditSamples = 1200;
constexpr double kNegTol = 1e-12;

void audit_samples(const Density::Eval& f, Support s, const std::string& label, bool& vanishes) {
  const double left = s.lo > 0.0 ? s.lo : 1e-8 * std::min(1.0, s.hi);
  const double right = std::isfinite(s.hi) ? s.hi : std::max(1e8, left * 1e16);
  const double step = std::log(right / left) / (kAuditSamples + 1);
  std::vector<double> v(kAuditSamples);
  for (int i = 0; i < kAuditSamples; ++i) {
    const double zeta = left * std::exp(step * (i + 1));
    v[i] = f(zeta);
    if (!std::isfinite(v[i]))
      throw Error(ErrorKind::RejectedDensity,
                  label + ": non-finite value at zeta=" + std::to_string(zeta));
  }
  vanishes = std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
  for (int i = 0; i < kAuditSamples; ++i) {
    if (v[i] >= 0.0) continue;
    double scale = 0.0;
    for (int j = std::max(0, i - 3); j <= std::min(kAuditSamples - 1, i + 3); ++j)
      scale = std::max(scale, std::abs(v[j]));
    if (v[i] < -kNegTol * scale)
      throw Error(ErrorKind::RejectedDensity,
                  label + ": negative value " + std::to_string(v[i]) + " at zeta=" +
                      std::to_string(left * std::exp(step * (i + 1))));
  }
}

void audit_slope(const Density::Eval& f, double p0, bool log_factor, const std::string& label) {
  const double z1 = 1e-13;
  const double z2 = 1e-12;
  const double f1 = f(z1);
  const double f2 = f(z2);
  if (!(f1 > 0.0) || !(f2 > 0.0)) return;
  const double slope = std::log(f2 / f1) / std::log(z2 / z1);
  const double tol = log_factor ? 0.1 : 0.05;
  if (std::abs(slope - p0) > tol)
    throw Error(ErrorKind::RejectedDensity, label + ": origin slope " + std::to_string(slope) +
                                                " disagrees with p0=" + std::to_string(p0));
}

double cap(double e) { return std::min(e, kSuperPolynomial); }

Density wrap(Density::Eval eval, double p0, double delta, Support support,
             DensityOptions opts) {
  return make_density(std::move(eval), p0, delta, support, true, std::move(opts));
}

}  // namespace

Density make_density(Density::Eval eval, double p0, double delta, Support support,
                     bool nonneg_attested, DensityOptions options) {
  const std::string& label = options.label.empty() ? std::string("density") : options.label;
  if (!nonneg_attested)
    throw Error(ErrorKind::RejectedDensity, label + ": nonnegativity not attested");
  if (!(delta > 0.0))
    throw Error(ErrorKind::RejectedDensity, label + ": decay exponent must be positive");
  if (!(support.lo >= 0.0) || !(support.hi > support.lo))
    throw Error(ErrorKind::RejectedDensity, label + ": bad support interval");
  if (!eval) throw Error(ErrorKind::RejectedDensity, label + ": empty evaluator");

  bool vanishes = false;
  audit_samples(eval, support, label, vanishes);
  if (!vanishes && support.lo == 0.0 && p0 < 20.0 && !options.oscillates_at_origin) audit_slope(eval, p0, options.log_factor, label);

  Density d(std::make_shared<const Density::Eval>(std::move(eval)), p0, delta, support,
            std::move(options));
  d.vanishes_ = vanishes;
  return d;
}

std::string to_string(TransformTag tag) {
  switch (tag) {
    case TransformTag::T0: return "T0";
    case TransformTag::T1: return "T1";
    case TransformTag::T2: return "T2";
    case TransformTag::T3: return "T3";
    case TransformTag::T4: return "T4";
    case TransformTag::T5: return "T5";
  }
  return "?";
}

Density apply_transform(const Density& phi, TransformKind kind) {
  const bool needs_a = kind.tag == TransformTag::T1 || kind.tag == TransformTag::T3 ||
                       kind.tag == TransformTag::T4;
  if (needs_a && !(kind.a > 0.0 && std::isfinite(kind.a)))
    throw Error(ErrorKind::BadParameter, to_string(kind.tag) + " needs a > 0");

  const double a = kind.a;
  const Support s = phi.support();
  DensityOptions opts{phi.log_factor(), phi.oscillates_at_origin(), phi.oscillation(),
                      to_string(kind.tag) + "[" + phi.label() + "]"};
  const double inf = std::numeric_limits<double>::infinity();

  switch (kind.tag) {
    case TransformTag::T0:
      return phi;
    case TransformTag::T1: {
      if (opts.oscillation)
        opts.oscillation->period /= std::pow(a, 1.0 / opts.oscillation->root);
      return wrap([phi, a](double z) { return phi(a * z); }, phi.p0(), phi.delta(),
                  {s.lo / a, s.hi / a}, std::move(opts));
    }
    case TransformTag::T2: {
      if (phi.delta() <= 1.0)
        throw Error(ErrorKind::InfiniteMass, "T2 needs a finite total mass (delta > 1)");
      const double delta = phi.delta() >= kSuperPolynomial ? kSuperPolynomial : phi.delta() - 1.0;
      return wrap([phi](double z) { return z * phi(z); }, cap(phi.p0() + 1.0), delta, s,
                  std::move(opts));
    }
    case TransformTag::T3:
      return wrap([phi, a](double z) { return phi(z) / (z + a); }, phi.p0(),
                  cap(phi.delta() + 1.0), s, std::move(opts));
    case TransformTag::T4: {
      // phi at the right end of its support becomes the left end here.
      const double p0 = std::isfinite(s.hi) ? 0.0
                        : phi.delta() >= kSuperPolynomial ? kSuperPolynomial
                                                          : phi.delta() - 1.0;
      const double delta = phi.p0() >= kSuperPolynomial ? kSuperPolynomial : phi.p0() + 1.0;
      opts.oscillates_at_origin = opts.oscillation.has_value();
      opts.oscillation.reset();
      opts.log_factor = false;
      const Support inv{std::isfinite(s.hi) ? a / s.hi : 0.0, s.lo > 0.0 ? a / s.lo : inf};
      return wrap([phi, a](double z) { return phi(a / z) / z; }, p0, std::max(delta, 1e-3),
                  inv, std::move(opts));
    }
    case TransformTag::T5: {
      if (opts.oscillation) opts.oscillation->root *= 2;
      const double p0 = phi.p0() >= kSuperPolynomial ? kSuperPolynomial : phi.p0() / 2.0;
      const double delta = phi.delta() >= kSuperPolynomial ? kSuperPolynomial : phi.delta() / 2.0;
      return wrap([phi](double z) { return phi(std::sqrt(z)); }, p0, delta,
                  {s.lo * s.lo, s.hi * s.hi}, std::move(opts));
    }
  }
  throw Error(ErrorKind::BadParameter, "unknown transform");
}

Density compose_transforms(const Density& phi, std::span<const TransformKind> chain) {
  Density cur = phi;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    try {
      cur = apply_transform(cur, chain[i]);
    } catch (const Error& e) {
      throw Error(e.kind(), e.detail(), static_cast<int>(i));
    }
  }
  return cur;
}

}  // namespace stieltjes
