#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "stieltjes/catalog.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/quadrature.hpp"
#include "stieltjes/zero_free.hpp"

namespace stieltjes::cli {
namespace {

using json = nlohmann::ordered_json;

struct Request {
  std::string entry;
  std::vector<std::string> params;
  double b = 0.0;
  double c = 0.0;
  std::optional<double> rel_tol;
  std::string format = "json";
  bool reference = false;
  double grid_lo = 0.1;
  double grid_hi = 10.0;
  int points = 20;
  double r_min = 0.05;
  double r_max = 20.0;
  int radii = 20;
  int angles = 64;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Params parse_params(const std::vector<std::string>& raw) {
  Params p;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(val, &used);
    } catch (const std::exception&) {
      throw UsageError("--param " + key + ": '" + val + "' is not a number");
    }
    if (used != val.size()) throw UsageError("--param " + key + ": '" + val + "' is not a number");
    if (!p.emplace(key, v).second) throw UsageError("--param " + key + " given twice");
  }
  return p;
}

double resolve_tol(const Request& req) {
  if (req.rel_tol) return *req.rel_tol;
  if (const char* env = std::getenv("STIELTJES_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0') throw UsageError(std::string("STIELTJES_TOL is not a number: ") + env);
    return v;
  }
  return kDefaultRelTol;
}

json number_or_null(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json extended(const ExtendedReal& v) { return v.is_infinite() ? json("inf") : json(v.value()); }

json params_json(const Params& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

int cmd_list(const Request& req, std::ostream& out) {
  if (req.reference) {
    out << catalog_reference();
    return kOk;
  }
  json arr = json::array();
  for (const auto& s : list_entries()) arr.push_back({{"id", s.id}, {"tier", s.tier}, {"domain", s.domain}});
  if (req.format == "json") {
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& s : list_entries()) {
      out << std::left << std::setw(12) << s.id << " tier " << s.tier << "  " << s.domain << "\n";
    }
  }
  return kOk;
}

int cmd_solve(const Request& req, json& rep) {
  const Params given = parse_params(req.params);
  const double tol = resolve_tol(req);
  const auto& entry = find_entry(req.entry);
  const Params p = resolve_params(entry, given);
  const EntrySolveReport r = solve_entry(req.entry, p, req.b, req.c, tol);
  rep["entry"] = req.entry;
  rep["params"] = params_json(p);
  rep["b"] = req.b;
  rep["c"] = req.c;
  rep["classification"] = std::string(to_string(r.report.classification.outcome));
  rep["reason"] = std::string(to_string(r.report.classification.reason));
  rep["root"] = number_or_null(r.report.root);
  rep["residual"] = number_or_null(r.report.residual);
  rep["bound"] = number_or_null(r.bound);
  rep["bound_ok"] = r.report.bound_ok;
  rep["critical_value"] = extended(r.report.critical_value);
  rep["expected"] = std::string(to_string(r.expected));
  rep["table_check"] = r.table_check;
  rep["closed_form_residual"] = number_or_null(r.closed_form_residual);
  rep["tolerance_met"] = r.report.tolerance_met;
  rep["rel_tol"] = tol;
  return r.report.tolerance_met ? kOk : kNumerical;
}

int cmd_classify(const Request& req, json& rep) {
  const Params given = parse_params(req.params);
  const double tol = resolve_tol(req);
  const auto& entry = find_entry(req.entry);
  const Params p = resolve_params(entry, given);
  const ExtendedReal mz = mass_over_zeta(entry.density(p), tol);
  const Classification cls = classify(mz, req.b, req.c);
  const Outcome expected = expected_outcome(entry, p, req.b, req.c);
  rep["entry"] = req.entry;
  rep["params"] = params_json(p);
  rep["b"] = req.b;
  rep["c"] = req.c;
  rep["classification"] = std::string(to_string(cls.outcome));
  rep["reason"] = std::string(to_string(cls.reason));
  rep["root"] = nullptr;
  rep["residual"] = nullptr;
  rep["bound"] = cls.outcome == Outcome::UniqueRoot && std::isfinite(cls.hi) ? json(cls.hi) : json(nullptr);
  rep["critical_value"] = extended(mz.minus(req.c));
  rep["expected"] = std::string(to_string(expected));
  rep["table_check"] = cls.outcome == expected;
  rep["rel_tol"] = tol;
  return mz.tolerance_met() ? kOk : kNumerical;
}

json validate_one(const CatalogEntry& entry, const Params& p, const std::vector<double>& grid, double tol,
                  bool& passed) {
  json j;
  j["entry"] = entry.id;
  j["tier"] = entry.tier;
  j["params"] = params_json(p);
  const ExtendedReal k = entry.critical(p);
  const ExtendedReal m = mass_over_zeta(entry.density(p), tol);
  j["critical_formula"] = extended(k);
  j["mass_over_zeta"] = extended(m);
  bool crit_ok = k.is_infinite() == m.is_infinite();
  if (crit_ok && k.is_finite()) crit_ok = std::abs(k.value() - m.value()) <= 1e-8 * std::abs(k.value());
  j["critical_agrees"] = crit_ok;
  bool ok = crit_ok;
  if (entry.tier == 1) {
    const double err = cross_validate(entry.id, p, grid, tol);
    j["max_rel_err"] = err;
    j["decays"] = decay_check([&](double x) { return entry.stieltjes(p, cplx(x, 0.0)).real(); });
    ok = ok && err <= 1e-7;
  } else {
    j["max_rel_err"] = nullptr;
  }
  j["passed"] = ok;
  passed = passed && ok;
  return j;
}

int cmd_validate(const Request& req, json& rep) {
  const Params given = parse_params(req.params);
  const double tol = resolve_tol(req);
  if (!(req.grid_lo > 0 && req.grid_hi > req.grid_lo && req.points >= 2)) {
    throw UsageError("validate needs 0 < --grid-lo < --grid-hi and --points >= 2");
  }
  const auto grid = log_spaced(req.grid_lo, req.grid_hi, req.points);
  bool passed = true;
  if (!req.entry.empty()) {
    const auto& entry = find_entry(req.entry);
    rep = validate_one(entry, resolve_params(entry, given), grid, tol, passed);
  } else {
    if (!given.empty()) throw UsageError("--param needs --entry");
    json all = json::array();
    for (const auto& e : catalog()) all.push_back(validate_one(e, resolve_params(e, {}), grid, tol, passed));
    rep["results"] = all;
    rep["passed"] = passed;
  }
  rep["grid"] = {{"lo", req.grid_lo}, {"hi", req.grid_hi}, {"points", req.points}};
  rep["rel_tol"] = tol;
  return passed ? kOk : kNumerical;
}

int cmd_zerofree(const Request& req, json& rep) {
  const Params given = parse_params(req.params);
  if (!(req.r_min > 0 && req.r_max > req.r_min && req.radii >= 1 && req.angles >= 2)) {
    throw UsageError("zerofree needs 0 < --r-min < --r-max, --radii >= 1, --angles >= 2");
  }
  const auto& entry = find_entry(req.entry);
  const Params p = resolve_params(entry, given);
  const ZeroFreeReport z = zero_free_scan(req.entry, p, log_spaced(req.r_min, req.r_max, req.radii), req.angles);
  rep["entry"] = req.entry;
  rep["params"] = params_json(p);
  rep["claim"] = entry.zero_free->statement;
  rep["half_angle"] = z.half_angle;
  rep["points"] = z.points;
  rep["min_abs"] = z.min_abs;
  json v = json::array();
  for (const cplx& c : z.violations) v.push_back({c.real(), c.imag()});
  rep["violations"] = v;
  rep["enclosed_zeros"] = z.enclosed_zeros;
  rep["winding_resolved"] = z.winding_resolved;
  rep["verdict"] = z.verdict();
  return kOk;
}

void print_text(const json& j, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      print_text(v, out, prefix + k + ".");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (const auto& item : v) {
        print_text(item, out, prefix);
        out << "\n";
      }
    } else {
      out << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve S[phi](z) - b z - c = 0 for the catalogued special-function equations"};
  app.require_subcommand(1);
  Request req;

  auto add_entry = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--entry", req.entry, "catalog id");
    if (required) o->required();
    sub->add_option("--param", req.params, "parameter as key=value (repeatable)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", req.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--rel-tol", req.rel_tol, "quadrature relative tolerance (default: STIELTJES_TOL or 1e-10)");
  };
  auto add_bc = [&](CLI::App* sub) {
    sub->add_option("--b", req.b, "coefficient of z, b >= 0")->required();
    sub->add_option("--c", req.c, "constant term")->required();
  };

  auto* list = app.add_subcommand("list", "list catalog entries");
  add_common(list);
  list->add_flag("--reference", req.reference, "print the markdown reference document");

  auto* solve = app.add_subcommand("solve", "classify and solve one entry");
  add_entry(solve, true);
  add_bc(solve);
  add_tol(solve);
  add_common(solve);

  auto* cls = app.add_subcommand("classify", "classify one entry without solving");
  add_entry(cls, true);
  add_bc(cls);
  add_tol(cls);
  add_common(cls);

  auto* val = app.add_subcommand("validate", "cross-validate closed forms and critical values");
  add_entry(val, false);
  add_tol(val);
  add_common(val);
  val->add_option("--grid-lo", req.grid_lo, "smallest x");
  val->add_option("--grid-hi", req.grid_hi, "largest x");
  val->add_option("--points", req.points, "log-spaced grid size");

  auto* zf = app.add_subcommand("zerofree", "scan an entry's zero-free sector");
  add_entry(zf, true);
  add_common(zf);
  zf->add_option("--r-min", req.r_min, "smallest radius");
  zf->add_option("--r-max", req.r_max, "largest radius");
  zf->add_option("--radii", req.radii, "number of log-spaced radii");
  zf->add_option("--angles", req.angles, "angles per radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  json rep;
  int code = kOk;
  try {
    if (list->parsed()) return cmd_list(req, out);
    if (solve->parsed()) code = cmd_solve(req, rep);
    if (cls->parsed()) code = cmd_classify(req, rep);
    if (val->parsed()) code = cmd_validate(req, rep);
    if (zf->parsed()) code = cmd_zerofree(req, rep);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.is_numerical() ? kNumerical : kUsage;
  }
  if (req.format == "json") {
    out << rep.dump(2) << "\n";
  } else {
    print_text(rep, out);
  }
  return code;
}

}  // namespace stieltjes::cli
