#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>

namespace stieltjes {

/// Exponent used for super-polynomial decay (or vanishing) at an endpoint.
inline constexpr double kSuperPolynomial = 50.0;

struct Support {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
};

/// The density is, for large argument, a periodic function of u = zeta^(1/root)
/// with the given period in u (times a power envelope).
struct Oscillation {
  int root = 1;
  double period = 0.0;
};

struct DensityOptions {
  /// Leading behaviour at the left endpoint carries an extra log factor.
  bool log_factor = false;
  /// No power law at the origin (e.g. after T4 of an oscillating density);
  /// skips the slope audit.
  bool oscillates_at_origin = false;
  std::optional<Oscillation> oscillation;
  std::string label;
};

class Density {
 public:
  using Eval = std::function<double(double)>;

  /// phi(zeta); zero outside the support.
  double operator()(double zeta) const {
    if (zeta < support_.lo || zeta > support_.hi) return 0.0;
    return (*eval_)(zeta);
  }
  /// The evaluator itself, without support clipping.
  double raw(double zeta) const { return (*eval_)(zeta); }

  double p0() const noexcept { return p0_; }
  double delta() const noexcept { return delta_; }
  const Support& support() const noexcept { return support_; }
  bool log_factor() const noexcept { return opts_.log_factor; }
  bool oscillates_at_origin() const noexcept { return opts_.oscillates_at_origin; }
  const std::optional<Oscillation>& oscillation() const noexcept { return opts_.oscillation; }
  const std::string& label() const noexcept { return opts_.label; }
  /// True when every audit sample was exactly zero.
  bool vanishes() const noexcept { return vanishes_; }

 private:
  friend Density make_density(Eval, double, double, Support, bool, DensityOptions);

  Density(std::shared_ptr<const Eval> eval, double p0, double delta, Support support,
          DensityOptions opts)
      : eval_(std::move(eval)), p0_(p0), delta_(delta), support_(support), opts_(std::move(opts)) {}

  std::shared_ptr<const Eval> eval_;
  double p0_;
  double delta_;
  Support support_;
  DensityOptions opts_;
  bool vanishes_ = false;
};

/// Packages an evaluator with its endpoint metadata and runs the audit:
/// nonnegativity on >= 1000 log-spaced samples, and the log-log slope near
/// the origin against p0. p0 is the exponent at support.lo.
Density make_density(Density::Eval eval, double p0, double delta, Support support = {},
                     bool nonneg_attested = true, DensityOptions options = {});

enum class TransformTag { T0, T1, T2, T3, T4, T5 };

struct TransformKind {
  TransformTag tag = TransformTag::T0;
  double a = 1.0;
};

std::string to_string(TransformTag tag);

Density apply_transform(const Density& phi, TransformKind kind);

/// Left-to-right fold of apply_transform. Errors carry the stage index.
Density compose_transforms(const Density& phi, std::span<const TransformKind> chain);

}  // namespace stieltjes
