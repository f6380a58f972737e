#include "stieltjes/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "catalog_internal.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/quadrature.hpp"

namespace stieltjes {

const std::vector<CatalogEntry>& catalog() { return detail::registry(); }

const CatalogEntry& find_entry(const std::string& id) {
  const auto& all = catalog();
  auto it = std::find_if(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.id == id; });
  if (it == all.end()) throw Error(ErrorKind::NotFound, "no catalog entry '" + id + "'");
  return *it;
}

std::vector<EntrySummary> list_entries() {
  std::vector<EntrySummary> out;
  for (const auto& e : catalog()) out.push_back({e.id, e.tier, e.domain_text});
  return out;
}

Params resolve_params(const CatalogEntry& entry, const Params& given) {
  for (const auto& [name, value] : given) {
    auto it = std::find_if(entry.params.begin(), entry.params.end(),
                           [&](const ParamSpec& s) { return s.name == name; });
    if (it == entry.params.end()) {
      throw Error(ErrorKind::BadParameter, "entry " + entry.id + " has no parameter '" + name + "'");
    }
  }
  Params p;
  for (const auto& spec : entry.params) {
    auto it = given.find(spec.name);
    const double v = it == given.end() ? spec.fallback : it->second;
    if (!std::isfinite(v) || !(v > spec.lo) || !(v < spec.hi) || (spec.integer && v != std::round(v))) {
      std::ostringstream msg;
      msg << entry.id << ": " << spec.name << " = " << v << " outside " << entry.domain_text;
      throw Error(ErrorKind::DomainError, msg.str());
    }
    p[spec.name] = v;
  }
  if (entry.coupled && !entry.coupled(p)) {
    throw Error(ErrorKind::DomainError, entry.id + ": parameters outside " + entry.domain_text);
  }
  return p;
}

Params sample_params(const CatalogEntry& entry, std::mt19937& gen) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Params p;
    for (const auto& spec : entry.params) {
      if (spec.integer) {
        std::uniform_int_distribution<int> d(static_cast<int>(spec.sample_lo), static_cast<int>(spec.sample_hi));
        p[spec.name] = d(gen);
      } else {
        std::uniform_real_distribution<double> d(spec.sample_lo, spec.sample_hi);
        p[spec.name] = d(gen);
      }
    }
    if (entry.coupled && !entry.coupled(p)) continue;
    if (entry.well_sampled && !entry.well_sampled(p)) continue;
    return p;
  }
  throw Error(ErrorKind::DomainError, entry.id + ": could not draw parameters");
}

namespace {

void require_tier1(const CatalogEntry& entry) {
  if (entry.tier != 1 || !entry.stieltjes) {
    throw Error(ErrorKind::TierMismatch, entry.id + " has no closed form (tier 2)");
  }
}

}  // namespace

double printed_lhs(const CatalogEntry& entry, const Params& p, double x, double b, double c) {
  require_tier1(entry);
  return entry.sign * (entry.stieltjes(p, cplx(x, 0.0)).real() - b * x - c);
}

Outcome expected_outcome(const CatalogEntry& entry, const Params& p, double b, double c) {
  for (const auto& row : entry.conditions) {
    if (row.applies(p, b, c)) return Outcome::UniqueRoot;
  }
  return Outcome::NoSolution;
}

double cross_validate(const std::string& id, const Params& params, const std::vector<double>& grid,
                      double rel_tol) {
  const auto& entry = find_entry(id);
  require_tier1(entry);
  const Params p = resolve_params(entry, params);
  const Density phi = entry.density(p);
  double worst = 0.0;
  for (double x : grid) {
    if (!(x > 0)) throw Error(ErrorKind::BadParameter, "cross_validate grid must be positive");
    const double q = stieltjes_transform(phi, CutPlanePoint(x), rel_tol).value.real();
    const double f = entry.stieltjes(p, cplx(x, 0.0)).real();
    worst = std::max(worst, std::abs(f - q) / std::abs(q));
  }
  return worst;
}

EntrySolveReport solve_entry(const std::string& id, const Params& params, double b, double c, double rel_tol) {
  const auto& entry = find_entry(id);
  const Params p = resolve_params(entry, params);
  EntrySolveReport out;
  out.report = solve_equation(entry.density(p), b, c, rel_tol);
  out.expected = expected_outcome(entry, p, b, c);
  out.table_check = out.report.classification.outcome == out.expected;
  const ExtendedReal k = entry.critical(p);
  if (b > 0 && k.is_finite()) out.bound = (k.value() - c) / b;
  if (entry.tier == 1 && out.report.root) {
    out.closed_form_residual = std::abs(printed_lhs(entry, p, *out.report.root, b, c));
    if (!(*out.closed_form_residual <= 1e-8 * (1.0 + std::abs(c)))) out.table_check = false;
  }
  if (out.bound && out.report.root && !(*out.report.root < *out.bound)) out.table_check = false;
  return out;
}

std::string catalog_reference() {
  std::ostringstream os;
  os << "# Catalog reference\n\n"
     << "Each equation is solved through S[phi](z) - b z - c = 0 with the density below. "
     << "Rows list where exactly one root exists; elsewhere there is none.\n";
  for (const auto& e : catalog()) {
    os << "\n## " << e.id << "\n\n";
    os << "- tier: " << e.tier << (e.tier == 1 ? " (closed form)" : " (quadrature only)") << "\n";
    os << "- equation: `" << e.equation << "`\n";
    os << "- density: `" << e.density_text << "`\n";
    os << "- parameters: " << e.domain_text;
    if (!e.params.empty()) {
      os << " (";
      for (std::size_t i = 0; i < e.params.size(); ++i) {
        os << (i ? ", " : "") << e.params[i].name << " default " << e.params[i].fallback;
      }
      os << ")";
    }
    os << "\n- conditions:\n";
    for (const auto& row : e.conditions) os << "  - `" << row.text << "`\n";
    os << "- bound: " << e.bound_text << "\n";
    if (e.zero_free) {
      os << "- zero-free claim: " << e.zero_free->statement << " (scanned, not proved)\n";
    }
  }
  return os.str();
}

}  // namespace stieltjes
