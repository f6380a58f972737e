#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stieltjes/density.hpp"
#include "stieltjes/extended_real.hpp"
#include "stieltjes/solver.hpp"
#include "stieltjes/specialfn.hpp"

namespace stieltjes {

using Params = std::map<std::string, double>;

struct ParamSpec {
  std::string name;
  double lo;  // open bounds
  double hi;
  double fallback;
  /// Range used for randomized draws (kept clear of excluded points).
  double sample_lo;
  double sample_hi;
  bool integer = false;
};

/// One row of an entry's condition display: where it applies the equation
/// has exactly one root. Anything not covered by a row has none.
struct ConditionRow {
  std::string text;
  std::function<bool(const Params&, double b, double c)> applies;
};

struct ZeroFreeClaim {
  SpecialFunctionId function;
  std::string statement;
  double half_angle;
  /// The claimed function with a nonvanishing envelope divided out.
  std::function<cplx(const Params&, cplx)> scaled;
  std::function<std::vector<cplx>(const Params&)> excluded;
};

struct CatalogEntry {
  std::string id;
  int tier = 1;
  std::string equation;
  std::string density_text;
  std::string domain_text;
  std::string bound_text;
  std::vector<ParamSpec> params;
  /// Constraints coupling several parameters (e.g. beta > alpha).
  std::function<bool(const Params&)> coupled;
  /// Extra filter for randomized draws: keeps clear of near-cancelling
  /// prefactors such as csc(pi alpha) close to integer alpha.
  std::function<bool(const Params&)> well_sampled;
  std::function<Density(const Params&)> density;
  /// S[phi](z) in closed form; empty for tier 2.
  std::function<cplx(const Params&, cplx)> stieltjes;
  /// The printed left-hand side equals sign * (S - b z - c).
  int sign = 1;
  std::function<ExtendedReal(const Params&)> critical;
  std::vector<ConditionRow> conditions;
  std::optional<ZeroFreeClaim> zero_free;
  /// Documented value of S at z = a for the forms with a removable point.
  std::function<double(const Params&)> extension_value;
};

const std::vector<CatalogEntry>& catalog();
/// Throws NotFound.
const CatalogEntry& find_entry(const std::string& id);

struct EntrySummary {
  std::string id;
  int tier;
  std::string domain;
};
std::vector<EntrySummary> list_entries();

/// Fills missing parameters with fallbacks and checks the domain. Throws
/// BadParameter for unknown names, DomainError outside the domain.
Params resolve_params(const CatalogEntry& entry, const Params& given);
Params sample_params(const CatalogEntry& entry, std::mt19937& gen);

/// Printed left-hand side at real x.
double printed_lhs(const CatalogEntry& entry, const Params& p, double x, double b, double c);

/// Outcome predicted by the entry's condition rows.
Outcome expected_outcome(const CatalogEntry& entry, const Params& p, double b, double c);

/// Max relative difference between the closed form and quadrature of the
/// density over the grid. Throws TierMismatch for tier-2 entries.
double cross_validate(const std::string& id, const Params& params, const std::vector<double>& grid,
                      double rel_tol = kDefaultRelTol);

struct EntrySolveReport {
  SolveReport report;
  Outcome expected;
  bool table_check = false;
  /// |printed LHS| at the root, tier 1 only.
  std::optional<double> closed_form_residual;
  /// Root bound (critical value - c)/b from the closed-form critical value.
  std::optional<double> bound;
};

EntrySolveReport solve_entry(const std::string& id, const Params& params, double b, double c,
                             double rel_tol = kDefaultRelTol);

/// Markdown reference listing every entry.
std::string catalog_reference();

}  // namespace stieltjes
