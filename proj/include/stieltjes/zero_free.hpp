#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stieltjes/catalog.hpp"

namespace stieltjes {

struct ZeroFreeReport {
  std::string id;
  /// Half-angle actually scanned: the claimed one minus 0.01 pi.
  double half_angle = 0.0;
  int points = 0;
  double min_abs = 0.0;
  /// Grid points where |f| fell below 1e-12 times the median |f| on the
  /// same radius.
  std::vector<cplx> violations;
  /// Argument-principle count on the boundary of the scanned annular sector.
  int enclosed_zeros = 0;
  bool winding_resolved = true;

  bool clean() const noexcept { return violations.empty() && enclosed_zeros == 0 && winding_resolved; }
  std::string verdict() const;
};

std::vector<double> log_spaced(double lo, double hi, int n);

/// Scans f over |arg z| <= half_angle on the given radii, skipping points
/// within 5% (relative) of any excluded point.
ZeroFreeReport scan_sector(const std::function<cplx(cplx)>& f, double half_angle, const std::vector<double>& radii,
                           int n_angles, const std::vector<cplx>& excluded = {});

/// Evidence for an entry's zero-free claim. Throws NoClaim when the entry
/// makes none.
ZeroFreeReport zero_free_scan(const std::string& id, const Params& params, const std::vector<double>& radii,
                              int n_angles);

}  // namespace stieltjes
