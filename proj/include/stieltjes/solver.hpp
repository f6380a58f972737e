#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "stieltjes/density.hpp"
#include "stieltjes/extended_real.hpp"
#include "stieltjes/quadrature.hpp"

namespace stieltjes {

enum class Outcome { NoSolution, UniqueRoot, Degenerate };

enum class Reason { none, m_nonpositive, c_nonpositive_b_zero, c_exceeds_mass, zero_density_zero_b };

std::string_view to_string(Outcome o) noexcept;
std::string_view to_string(Reason r) noexcept;

struct Classification {
  Outcome outcome = Outcome::NoSolution;
  Reason reason = Reason::none;
  /// Root bracket (lo, hi]; hi is +inf when the critical value is infinite
  /// or b = 0.
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  bool operator==(const Classification&) const = default;
};

struct SolveReport {
  Classification classification;
  std::optional<double> root;
  std::optional<double> residual;
  bool bound_ok = true;
  int iterations = 0;
  ExtendedReal critical_value = ExtendedReal::finite(0.0);
  bool tolerance_met = true;
};

/// mz is the integral of phi / zeta, so the critical value is mz - c.
Classification classify(const ExtendedReal& mz, double b, double c);

struct SolveOptions {
  bool polish = true;
  double bracket_inset = 1e-12;
  double expansion_cap = 1e15;
};

/// F must be strictly decreasing on (0, inf) with the root inside cls's
/// bracket. tol_res is absolute.
SolveReport solve_real(const std::function<double(double)>& F, const Classification& cls,
                       double tol_res, const SolveOptions& options = {});

/// S[phi](z) - b z - c = 0.
SolveReport solve_equation(const Density& phi, double b, double c, double rel_tol = kDefaultRelTol,
                           const SolveOptions& options = {});

/// The five single-operator equation forms written in terms of g = S[phi]:
///   T1: g(a z) - b z - c        T2: z g(z) + b z - c
///   T3: (g(z) - g(a))/(z - a) + b z + c
///   T4: g(a/z)/z - b z - c      T5: g(i sqrt z) + g(-i sqrt z) - b z - c
/// The reported critical value is the one of the form (c itself for T2).
SolveReport solve_corollary_form(const Density& phi, TransformKind form, double b, double c,
                                 double rel_tol = kDefaultRelTol);

/// S[T phi](z) - b z - c = 0 for a chain T of operators.
SolveReport solve_composed(const Density& phi, std::span<const TransformKind> chain, double b,
                           double c, double rel_tol = kDefaultRelTol);

/// The combination of g that each form's operator produces, i.e.
/// S[T phi](z) expressed through g = S[phi]. total_mass is only used by T2.
cplx corollary_stieltjes_part(TransformKind form, const std::function<cplx(cplx)>& g,
                              double total_mass, cplx z);

struct OffAxisReport {
  int samples = 0;
  int violations = 0;
  double min_magnitude = std::numeric_limits<double>::infinity();
  std::vector<cplx> violating;
  bool vacuous = false;
};

/// Samples z off the real axis (|Im z| >= 0.01) and checks that
/// Im(S[phi](z) - b z - c) is nonzero with sign -sign(Im z).
OffAxisReport verify_no_offaxis_roots(const Density& phi, double b, double c, int samples,
                                      std::uint32_t seed = 20240601u);

}  // namespace stieltjes
