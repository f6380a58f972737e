#include "stieltjes/zero_free.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stieltjes/errors.hpp"

namespace stieltjes {
namespace {

using std::numbers::pi;

constexpr double kFloorFactor = 1e-12;
constexpr double kAngleMargin = 0.01 * pi;
constexpr double kExclusion = 0.05;
constexpr double kMaxStep = 0.5;
constexpr int kMaxDepth = 24;

struct Winder {
  const std::function<cplx(cplx)>& f;
  bool resolved = true;

  /// Change of arg f along the path between parameters s0 and s1.
  double along(const std::function<cplx(double)>& path, double s0, cplx f0, double s1, cplx f1, int depth) {
    const double d = std::arg(f1 / f0);
    if (std::abs(d) <= kMaxStep) return d;
    if (depth >= kMaxDepth) {
      resolved = false;
      return d;
    }
    const double sm = 0.5 * (s0 + s1);
    const cplx fm = f(path(sm));
    return along(path, s0, f0, sm, fm, depth + 1) + along(path, sm, fm, s1, f1, depth + 1);
  }

  double total(const std::function<cplx(double)>& path, int pieces) {
    double sum = 0.0;
    cplx prev = f(path(0.0));
    for (int i = 1; i <= pieces; ++i) {
      const double s = static_cast<double>(i) / pieces;
      const cplx cur = f(path(s));
      sum += along(path, static_cast<double>(i - 1) / pieces, prev, s, cur, 0);
      prev = cur;
    }
    return sum;
  }
};

}  // namespace

std::string ZeroFreeReport::verdict() const {
  if (clean()) return "no zero found on grid";
  if (!winding_resolved) return "inconclusive: argument not resolved along the boundary";
  return "possible zero: " + std::to_string(violations.size()) + " grid points below floor, winding count " +
         std::to_string(enclosed_zeros);
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    out.push_back(lo * std::pow(hi / lo, t));
  }
  return out;
}

ZeroFreeReport scan_sector(const std::function<cplx(cplx)>& f, double half_angle, const std::vector<double>& radii,
                           int n_angles, const std::vector<cplx>& excluded) {
  if (radii.empty() || n_angles < 2) throw Error(ErrorKind::BadParameter, "scan needs radii and >= 2 angles");
  for (double r : radii) {
    if (!(r > 0) || !std::isfinite(r)) throw Error(ErrorKind::BadParameter, "radii must be positive");
  }
  if (!(half_angle > 0 && half_angle < pi)) throw Error(ErrorKind::BadParameter, "half-angle must lie in (0, pi)");
  auto skip = [&](cplx z) {
    return std::any_of(excluded.begin(), excluded.end(),
                       [&](cplx e) { return std::abs(z - e) <= kExclusion * std::abs(e); });
  };
  ZeroFreeReport rep;
  rep.half_angle = half_angle;
  rep.min_abs = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    std::vector<cplx> zs;
    std::vector<double> mags;
    for (int j = 0; j < n_angles; ++j) {
      const double th = -rep.half_angle + 2.0 * rep.half_angle * j / (n_angles - 1);
      const cplx z = std::polar(r, th);
      if (skip(z)) continue;
      zs.push_back(z);
      mags.push_back(std::abs(f(z)));
    }
    if (mags.empty()) continue;
    std::vector<double> sorted = mags;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double floor = kFloorFactor * sorted[sorted.size() / 2];
    for (std::size_t i = 0; i < mags.size(); ++i) {
      ++rep.points;
      rep.min_abs = std::min(rep.min_abs, mags[i]);
      if (!(mags[i] > floor)) rep.violations.push_back(zs[i]);
    }
  }

  const auto [rlo, rhi] = std::minmax_element(radii.begin(), radii.end());
  const double r0 = *rlo, r1 = *rhi, h = rep.half_angle;
  if (r1 > r0) {
    Winder w{f};
    const double lr = std::log(r1 / r0);
    double turn = 0.0;
    turn += w.total([&](double s) { return std::polar(r1, -h + 2.0 * h * s); }, 64);
    turn += w.total([&](double s) { return std::polar(r1 * std::exp(-lr * s), h); }, 32);
    turn += w.total([&](double s) { return std::polar(r0, h - 2.0 * h * s); }, 64);
    turn += w.total([&](double s) { return std::polar(r0 * std::exp(lr * s), -h); }, 32);
    rep.enclosed_zeros = static_cast<int>(std::lround(turn / (2.0 * pi)));
    rep.winding_resolved = w.resolved;
  }
  return rep;
}

ZeroFreeReport zero_free_scan(const std::string& id, const Params& params, const std::vector<double>& radii,
                              int n_angles) {
  const auto& entry = find_entry(id);
  if (!entry.zero_free) throw Error(ErrorKind::NoClaim, id + " makes no zero-free claim");
  const Params p = resolve_params(entry, params);
  const auto& claim = *entry.zero_free;
  const std::vector<cplx> excluded = claim.excluded ? claim.excluded(p) : std::vector<cplx>{};
  ZeroFreeReport rep = scan_sector([&](cplx z) { return claim.scaled(p, z); }, claim.half_angle - kAngleMargin,
                                   radii, n_angles, excluded);
  rep.id = id;
  return rep;
}

}  // namespace stieltjes
