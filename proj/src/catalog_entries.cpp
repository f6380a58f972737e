#include <cmath>
#include <numbers>

#include "catalog_internal.hpp"
#include "stieltjes/errors.hpp"

namespace stieltjes::detail {
namespace {

using std::numbers::pi;
constexpr double kEulerC = std::numbers::egamma;
constexpr double kNearA = 1e-4;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Pred = std::function<bool(const Params&)>;
using Value = std::function<double(const Params&)>;

double csc(double x) { return 1.0 / std::sin(x); }
double sec(double x) { return 1.0 / std::cos(x); }
double cot(double x) { return std::cos(x) / std::sin(x); }

double real_arg(cplx z) {
  if (z.imag() != 0.0 || !(z.real() > 0.0)) {
    throw Error(ErrorKind::DomainError, "closed form implemented on the positive axis only");
  }
  return z.real();
}

ParamSpec scale(const char* name, double lo = 0.3, double hi = 3.0) {
  return {name, 0.0, kInf, 1.0, lo, hi};
}

std::vector<ConditionRow> rows_unbounded() {
  return {
      {"b>0", [](const Params&, double b, double) { return b > 0; }},
      {"b=0, c>0", [](const Params&, double b, double c) { return b == 0 && c > 0; }},
  };
}

std::vector<ConditionRow> rows_bounded(const std::string& k_text, Value k) {
  return {
      {"b>0, c<" + k_text, [k](const Params& p, double b, double c) { return b > 0 && c < k(p); }},
      {"b=0, " + k_text + ">c>0",
       [k](const Params& p, double b, double c) { return b == 0 && c > 0 && c < k(p); }},
  };
}

/// Rows of the displays whose critical value is finite only on part of the
/// parameter domain.
std::vector<ConditionRow> rows_split(const std::string& fin_text, Pred fin, const std::string& inf_text,
                                     const std::string& k_text, Value k) {
  return {
      {"b>0, " + fin_text + ", c<" + k_text,
       [fin, k](const Params& p, double b, double c) { return b > 0 && fin(p) && c < k(p); }},
      {"b>0, " + inf_text, [fin](const Params& p, double b, double) { return b > 0 && !fin(p); }},
      {"b=0, " + fin_text + ", " + k_text + ">c>0",
       [fin, k](const Params& p, double b, double c) {
         return b == 0 && fin(p) && c > 0 && c < k(p);
       }},
      {"b=0, " + inf_text + ", c>0",
       [fin](const Params& p, double b, double c) { return b == 0 && !fin(p) && c > 0; }},
  };
}

Density power_density(std::function<double(double)> f, double p0, double delta, Support s = {},
                      DensityOptions o = {}) {
  return make_density(std::move(f), p0, delta, s, true, std::move(o));
}

DensityOptions with_log() {
  DensityOptions o;
  o.log_factor = true;
  return o;
}

DensityOptions oscillating(int root, double period) {
  DensityOptions o;
  o.oscillation = Oscillation{root, period};
  return o;
}

/// log(x/a)/(x - a)
double log_ratio(double x, double a) {
  const double t = (x - a) / a;
  if (std::abs(t) < 1e-8) return (1.0 - t / 2.0) / a;
  if (std::abs(t) < 0.5) return std::log1p(t) / (x - a);
  return std::log(x / a) / (x - a);
}

cplx cexpm1(cplx w) {
  if (std::abs(w) < 1e-3) return w * (1.0 + w / 2.0 * (1.0 + w / 3.0 * (1.0 + w / 4.0)));
  return std::exp(w) - 1.0;
}

cplx p2_form(const Params& p, cplx z) {
  const double al = p.at("alpha"), a = p.at("a");
  const cplx t = (z - a) / a;
  cplx q;
  if (std::abs(t) <= kNearA) {
    q = al * (1.0 + (al - 1.0) / 2.0 * t * (1.0 + (al - 2.0) / 3.0 * t));
  } else {
    q = cexpm1(al * special::log1p(t)) / t;
  }
  return pi * csc(pi * al) * std::pow(a, al - 1.0) * q;
}

cplx l1_form(const Params& p, cplx z) {
  const double a = p.at("a");
  const cplx t = (z - a) / a;
  if (std::abs(t) <= kNearA) return (1.0 - t / 2.0 + t * t / 3.0) / a;
  return std::log(z / a) / (z - a);
}

cplx l7_form(const Params& p, cplx z) {
  const double al = p.at("alpha"), a = p.at("a");
  const double k = pi * cot(pi * al);
  const cplx t = (z - a) / a;
  cplx d;
  if (std::abs(t) <= kNearA) {
    const double a2 = al * (al - 1.0) / 2.0;
    const double a3 = a2 * (al - 2.0) / 3.0;
    d = std::pow(a, al - 1.0) *
        ((k * al - 1.0) + (k * a2 - al + 0.5) * t + (k * a3 - a2 + al / 2.0 - 1.0 / 3.0) * t * t);
  } else {
    const cplx za = std::pow(z, al);
    d = (k * (za - std::pow(a, al)) - za * std::log(z / a)) / (z - a);
  }
  const double c2 = std::cos(pi * al / 2.0);
  return pi / (z + a) * (csc(pi * al) * d + pi * std::pow(a, al - 1.0) / (4.0 * c2 * c2));
}

double ratio_of_gammas(double x, double y, double u, double v) {
  // Gamma(x) Gamma(y) / (Gamma(u) Gamma(v)) with signs.
  const double s = std::copysign(1.0, std::tgamma(x)) * std::copysign(1.0, std::tgamma(y)) *
                   std::copysign(1.0, std::tgamma(u)) * std::copysign(1.0, std::tgamma(v));
  return s * std::exp(std::lgamma(x) + std::lgamma(y) - std::lgamma(u) - std::lgamma(v));
}

double near_integer_gap(double x) { return std::abs(x - std::round(x)); }

std::function<bool(const Params&)> away_from_integers(const char* name, double scale = 1.0) {
  return [name, scale](const Params& p) { return near_integer_gap(scale * p.at(name)) > 0.05; };
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;

  // ---- trigonometric
  {
    CatalogEntry e;
    e.id = "e1";
    e.equation = "pi z^(-1/2) (1 - exp(-2 a z^(1/2)))/2 - b z - c = 0";
    e.density_text = "zeta^(-1/2) sin^2(a zeta^(1/2))";
    e.domain_text = "a>0";
    e.bound_text = "(pi a - c)/b > x > 0 if b>0";
    e.params = {scale("a")};
    e.density = [](const Params& p) {
      const double a = p.at("a");
      return power_density(
          [a](double x) {
            const double s = std::sin(a * std::sqrt(x));
            return s * s / std::sqrt(x);
          },
          0.5, 0.5, {}, oscillating(2, pi / a));
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const cplx r = std::sqrt(z);
      return pi / r * (-cexpm1(-2.0 * p.at("a") * r)) / 2.0;
    };
    e.critical = [](const Params& p) { return ExtendedReal::finite(pi * p.at("a")); };
    e.conditions = rows_bounded("pi a", [](const Params& p) { return pi * p.at("a"); });
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "e2";
    e.equation = "pi z^(-1/2) (1 + exp(-2 a z^(1/2)))/2 - b z - c = 0";
    e.density_text = "zeta^(-1/2) cos^2(a zeta^(1/2))";
    e.domain_text = "a>0";
    e.bound_text = "none (critical value infinite)";
    e.params = {scale("a")};
    e.density = [](const Params& p) {
      const double a = p.at("a");
      return power_density(
          [a](double x) {
            const double s = std::cos(a * std::sqrt(x));
            return s * s / std::sqrt(x);
          },
          -0.5, 0.5, {}, oscillating(2, pi / a));
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const cplx r = std::sqrt(z);
      return pi / r * (1.0 + std::exp(-2.0 * p.at("a") * r)) / 2.0;
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "hyperbolic1";
    e.equation =
        "pi z^(-1/2) ((beta/lambda - lambda/beta) sinh(2 a z^(1/2))/2 - 1) / ((beta sinh(a z^(1/2)))^2 - "
        "(lambda cosh(a z^(1/2)))^2) - b z - c = 0";
    e.density_text = "zeta^(-1/2) / ((beta sin(a zeta^(1/2)))^2 + (lambda cos(a zeta^(1/2)))^2)";
    e.domain_text = "a>0, beta lambda>0";
    e.bound_text = "none (critical value infinite)";
    e.params = {scale("a", 0.3, 2.0), {"beta", -kInf, kInf, 1.0, 0.5, 2.0},
                {"lambda_", -kInf, kInf, 2.0, 0.5, 2.0}};
    e.coupled = [](const Params& p) { return p.at("beta") * p.at("lambda_") > 0; };
    e.density = [](const Params& p) {
      const double a = p.at("a"), be = p.at("beta"), la = p.at("lambda_");
      return power_density(
          [=](double x) {
            const double u = a * std::sqrt(x);
            const double s = be * std::sin(u), c = la * std::cos(u);
            return 1.0 / (std::sqrt(x) * (s * s + c * c));
          },
          -0.5, 0.5, {}, oscillating(2, pi / a));
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double a = p.at("a"), be = p.at("beta"), la = p.at("lambda_");
      const cplx r = std::sqrt(z);
      // Numerator and denominator divided by exp(2 a r)/4.
      const cplx q = std::exp(-2.0 * a * r);
      const cplx num = (be / la - la / be) * (1.0 - q * q) - 4.0 * q;
      const cplx den = be * be * (1.0 - q) * (1.0 - q) - la * la * (1.0 + q) * (1.0 + q);
      return pi / r * num / den;
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }

  // ---- power laws
  {
    CatalogEntry e;
    e.id = "p1";
    e.equation = "b z - pi csc(pi alpha) z^(alpha-1) + c = 0";
    e.density_text = "zeta^(alpha-1)";
    e.domain_text = "1>alpha>0";
    e.bound_text = "none (critical value infinite)";
    e.sign = -1;
    e.params = {{"alpha", 0.0, 1.0, 0.5, 0.15, 0.85}};
    e.density = [](const Params& p) {
      const double al = p.at("alpha");
      return power_density([al](double x) { return std::pow(x, al - 1.0); }, al - 1.0, 1.0 - al);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double al = p.at("alpha");
      return pi * csc(pi * al) * std::pow(z, al - 1.0);
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "p2";
    e.equation = "pi csc(pi alpha) (z^alpha - a^alpha)/(z - a) - b z - c = 0";
    e.density_text = "zeta^alpha/(zeta + a)";
    e.domain_text = "1>alpha>-1, alpha!=0, a>0";
    e.bound_text = "(pi a^(alpha-1) csc(pi alpha) - c)/b > x > 0 if b>0, 1>alpha>0";
    e.params = {{"alpha", -1.0, 1.0, 0.5, -0.85, 0.85}, scale("a")};
    e.coupled = [](const Params& p) { return near_integer_gap(p.at("alpha")) > 1e-3; };
    e.well_sampled = away_from_integers("alpha");
    e.density = [](const Params& p) {
      const double al = p.at("alpha"), a = p.at("a");
      return power_density([=](double x) { return std::pow(x, al) / (x + a); }, al, 1.0 - al);
    };
    e.stieltjes = p2_form;
    e.critical = [](const Params& p) {
      const double al = p.at("alpha");
      if (al <= 0) return ExtendedReal::infinity();
      return ExtendedReal::finite(pi * std::pow(p.at("a"), al - 1.0) * csc(pi * al));
    };
    e.conditions = rows_split(
        "1>alpha>0", [](const Params& p) { return p.at("alpha") > 0; }, "0>=alpha>-1",
        "pi a^(alpha-1) csc(pi alpha)",
        [](const Params& p) { return pi * std::pow(p.at("a"), p.at("alpha") - 1.0) * csc(pi * p.at("alpha")); });
    e.extension_value = [](const Params& p) {
      const double al = p.at("alpha");
      return pi * al * std::pow(p.at("a"), al - 1.0) * csc(pi * al);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "p3";
    e.equation =
        "pi (a^(alpha-1) sec(pi alpha/2) z - 2 csc(pi alpha) z^alpha + a^alpha csc(pi alpha/2)) / (2 (z^2 + a^2)) "
        "- b z - c = 0";
    e.density_text = "zeta^alpha/(zeta^2 + a^2)";
    e.domain_text = "2>alpha>-1, alpha not in {0, 1}, a>0";
    e.bound_text = "(pi a^(alpha-2) csc(pi alpha/2)/2 - c)/b > x > 0 if b>0, 2>alpha>0";
    e.params = {{"alpha", -1.0, 2.0, 0.5, -0.85, 1.85}, scale("a")};
    e.coupled = [](const Params& p) { return near_integer_gap(p.at("alpha")) > 1e-3; };
    e.well_sampled = away_from_integers("alpha");
    e.density = [](const Params& p) {
      const double al = p.at("alpha"), a = p.at("a");
      return power_density([=](double x) { return std::pow(x, al) / (x * x + a * a); }, al, 2.0 - al);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double al = p.at("alpha"), a = p.at("a");
      const cplx num = std::pow(a, al - 1.0) * sec(pi * al / 2.0) * z - 2.0 * csc(pi * al) * std::pow(z, al) +
                       std::pow(a, al) * csc(pi * al / 2.0);
      return pi * num / (2.0 * (z * z + a * a));
    };
    auto k = [](const Params& p) {
      const double al = p.at("alpha");
      return pi * std::pow(p.at("a"), al - 2.0) * csc(pi * al / 2.0) / 2.0;
    };
    e.critical = [k](const Params& p) {
      return p.at("alpha") > 0 ? ExtendedReal::finite(k(p)) : ExtendedReal::infinity();
    };
    e.conditions = rows_split(
        "2>alpha>0", [](const Params& p) { return p.at("alpha") > 0; }, "0>=alpha>-1",
        "pi a^(alpha-2) csc(pi alpha/2)/2", k);
    out.push_back(std::move(e));
  }

  // ---- logarithms
  {
    CatalogEntry e;
    e.id = "l1";
    e.equation = "log(a/z)/(z - a) + b z + c = 0";
    e.density_text = "1/(zeta + a)";
    e.domain_text = "a>0";
    e.bound_text = "none (critical value infinite)";
    e.sign = -1;
    e.params = {scale("a")};
    e.density = [](const Params& p) {
      const double a = p.at("a");
      return power_density([a](double x) { return 1.0 / (x + a); }, 0.0, 1.0);
    };
    e.stieltjes = l1_form;
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    e.extension_value = [](const Params& p) { return 1.0 / p.at("a"); };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "l2";
    e.equation = "(log(z/a) - pi z/(2 a))/(z^2 + a^2) + b z + c = 0";
    e.density_text = "1/(zeta^2 + a^2)";
    e.domain_text = "a>0";
    e.bound_text = "none (critical value infinite)";
    e.sign = -1;
    e.params = {scale("a")};
    e.density = [](const Params& p) {
      const double a = p.at("a");
      return power_density([a](double x) { return 1.0 / (x * x + a * a); }, 0.0, 2.0);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double a = p.at("a");
      return (pi * z / (2.0 * a) - std::log(z / a)) / (z * z + a * a);
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "l3";
    e.equation = "(z log(z/a) + pi a/2)/(z^2 + a^2) - b z - c = 0";
    e.density_text = "zeta/(zeta^2 + a^2)";
    e.domain_text = "a>0";
    e.bound_text = "(pi/(2 a) - c)/b > x > 0 if b>0";
    e.params = {scale("a")};
    e.density = [](const Params& p) {
      const double a = p.at("a");
      return power_density([a](double x) { return x / (x * x + a * a); }, 1.0, 1.0);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double a = p.at("a");
      return (z * std::log(z / a) + pi * a / 2.0) / (z * z + a * a);
    };
    e.critical = [](const Params& p) { return ExtendedReal::finite(pi / (2.0 * p.at("a"))); };
    e.conditions = rows_bounded("pi/(2 a)", [](const Params& p) { return pi / (2.0 * p.at("a")); });
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "l4";
    e.equation = "2 pi z^(-1/2) log(a^(1/2) z^(1/2) + 1) - b z - c = 0";
    e.density_text = "zeta^(-1/2) log(a zeta + 1)";
    e.domain_text = "a>0";
    e.bound_text = "(2 pi a^(1/2) - c)/b > x > 0 if b>0";
    e.params = {scale("a")};
    e.density = [](const Params& p) {
      const double a = p.at("a");
      return power_density([a](double x) { return std::log1p(a * x) / std::sqrt(x); }, 0.5, 0.5);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const cplx r = std::sqrt(z);
      return 2.0 * pi / r * special::log1p(std::sqrt(p.at("a")) * r);
    };
    e.critical = [](const Params& p) { return ExtendedReal::finite(2.0 * pi * std::sqrt(p.at("a"))); };
    e.conditions =
        rows_bounded("2 pi a^(1/2)", [](const Params& p) { return 2.0 * pi * std::sqrt(p.at("a")); });
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "l5";
    e.equation = "(pi^2 + log^2(z/a))/(2 (z + a)) - b z - c = 0";
    e.density_text = "log(zeta/a)/(zeta - a), 1/a at zeta = a";
    e.domain_text = "a>0";
    e.bound_text = "none (critical value infinite)";
    e.params = {scale("a")};
    e.density = [](const Params& p) {
      const double a = p.at("a");
      return power_density([a](double x) { return log_ratio(x, a); }, 0.0, 1.0, {}, with_log());
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double a = p.at("a");
      const cplx l = std::log(z / a);
      return (pi * pi + l * l) / (2.0 * (z + a));
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "l6";
    e.equation =
        "pi (a^alpha log(a/z)/pi + csc(pi alpha) z^alpha - a^alpha cot(pi alpha))/(a + z) - b z - c = 0";
    e.density_text = "(zeta^alpha - a^alpha)/(zeta - a), alpha a^(alpha-1) at zeta = a";
    e.domain_text = "1>alpha>0, a>0";
    e.bound_text = "none (critical value infinite)";
    e.params = {{"alpha", 0.0, 1.0, 0.5, 0.15, 0.85}, scale("a")};
    e.density = [](const Params& p) {
      const double al = p.at("alpha"), a = p.at("a");
      return power_density(
          [=](double x) {
            const double t = (x - a) / a;
            if (std::abs(t) >= 0.5) return (std::pow(x, al) - std::pow(a, al)) / (x - a);
            const double q = std::abs(t) < 1e-12 ? al : std::expm1(al * std::log1p(t)) / t;
            return std::pow(a, al - 1.0) * q;
          },
          0.0, 1.0 - al);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double al = p.at("alpha"), a = p.at("a");
      const double aa = std::pow(a, al);
      return pi * (aa * std::log(a / z) / pi + csc(pi * al) * std::pow(z, al) - aa * cot(pi * al)) / (a + z);
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    e.extension_value = [](const Params& p) {
      const double al = p.at("alpha");
      return pi / 2.0 * std::pow(p.at("a"), al - 1.0) * std::tan(pi * al / 2.0);
    };
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "l7";
    e.equation =
        "pi/(z + a) (csc(pi alpha) (pi cot(pi alpha) (z^alpha - a^alpha) - z^alpha log(z/a))/(z - a) + "
        "pi a^(alpha-1)/(4 cos^2(pi alpha/2))) - b z - c = 0";
    e.density_text = "zeta^alpha log(zeta/a)/(zeta^2 - a^2), a^(alpha-2)/2 at zeta = a";
    e.domain_text = "1>alpha>-1, alpha!=0, a>0";
    e.bound_text = "(pi^2 a^(alpha-2) csc^2(pi alpha/2)/4 - c)/b > x > 0 if b>0, 1>alpha>0";
    e.params = {{"alpha", -1.0, 1.0, 0.5, -0.85, 0.85}, scale("a")};
    e.coupled = [](const Params& p) { return near_integer_gap(p.at("alpha")) > 1e-3; };
    e.well_sampled = away_from_integers("alpha");
    e.density = [](const Params& p) {
      const double al = p.at("alpha"), a = p.at("a");
      return power_density(
          [=](double x) { return std::pow(x, al) / (x + a) * log_ratio(x, a); }, al, 2.0 - al, {},
          with_log());
    };
    e.stieltjes = l7_form;
    auto k = [](const Params& p) {
      const double s = csc(pi * p.at("alpha") / 2.0);
      return pi * pi * std::pow(p.at("a"), p.at("alpha") - 2.0) * s * s / 4.0;
    };
    e.critical = [k](const Params& p) {
      return p.at("alpha") > 0 ? ExtendedReal::finite(k(p)) : ExtendedReal::infinity();
    };
    e.conditions = rows_split(
        "1>alpha>0", [](const Params& p) { return p.at("alpha") > 0; }, "0>=alpha>-1",
        "pi^2 a^(alpha-2) csc^2(pi alpha/2)/4", k);
    e.extension_value = [](const Params& p) {
      const double al = p.at("alpha"), a = p.at("a");
      const double c2 = std::cos(pi * al / 2.0);
      return pi * std::pow(a, al - 2.0) / 2.0 *
             (csc(pi * al) * (pi * al * cot(pi * al) - 1.0) + pi / (4.0 * c2 * c2));
    };
    out.push_back(std::move(e));
  }

  // ---- incomplete gamma
  {
    CatalogEntry e;
    e.id = "gamma1";
    e.equation = "Gamma(1-alpha) z^(-alpha) exp(a z) Gamma(alpha, a z) - b z - c = 0";
    e.density_text = "zeta^(-alpha) exp(-a zeta)";
    e.domain_text = "alpha<1, alpha not an integer, a>0";
    e.bound_text = "(a^alpha Gamma(-alpha) - c)/b > x > 0 if b>0, alpha<0";
    e.params = {{"alpha", -kInf, 1.0, 0.5, -2.5, 0.85}, scale("a")};
    e.coupled = [](const Params& p) { return near_integer_gap(p.at("alpha")) > 1e-3; };
    e.well_sampled = away_from_integers("alpha");
    e.density = [](const Params& p) {
      const double al = p.at("alpha"), a = p.at("a");
      return power_density([=](double x) { return std::pow(x, -al) * std::exp(-a * x); }, -al,
                           kSuperPolynomial);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double al = p.at("alpha"), a = p.at("a");
      return std::tgamma(1.0 - al) * std::pow(z, -al) * special::upper_gamma_scaled(al, a * z);
    };
    auto k = [](const Params& p) { return std::pow(p.at("a"), p.at("alpha")) * std::tgamma(-p.at("alpha")); };
    e.critical = [k](const Params& p) {
      return p.at("alpha") < 0 ? ExtendedReal::finite(k(p)) : ExtendedReal::infinity();
    };
    e.conditions = rows_split(
        "alpha<0", [](const Params& p) { return p.at("alpha") < 0; }, "1>alpha>=0", "a^alpha Gamma(-alpha)", k);
    e.zero_free = ZeroFreeClaim{
        SpecialFunctionId::upper_incomplete_gamma, "Gamma(alpha, z) has no zero for alpha<1, |arg z|<pi, z!=0", pi,
        [](const Params& p, cplx z) {
          const double al = p.at("alpha");
          return special::upper_gamma_scaled(al, z) * std::pow(z, 1.0 - al);
        },
        {}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "gamma2";
    e.equation = "Gamma(1-alpha) z^(alpha-1) exp(a/z) Gamma(alpha, a/z) - b z - c = 0";
    e.density_text = "zeta^(alpha-1) exp(-a/zeta)";
    e.domain_text = "alpha<1, alpha not an integer, a>0";
    e.bound_text = "(a^(alpha-1) Gamma(1-alpha) - c)/b > x > 0 if b>0";
    e.params = {{"alpha", -kInf, 1.0, 0.5, -2.5, 0.85}, scale("a")};
    e.coupled = [](const Params& p) { return near_integer_gap(p.at("alpha")) > 1e-3; };
    e.well_sampled = away_from_integers("alpha");
    e.density = [](const Params& p) {
      const double al = p.at("alpha"), a = p.at("a");
      return power_density([=](double x) { return std::pow(x, al - 1.0) * std::exp(-a / x); }, kSuperPolynomial,
                           1.0 - al);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double al = p.at("alpha"), a = p.at("a");
      return std::tgamma(1.0 - al) * std::pow(z, al - 1.0) * special::upper_gamma_scaled(al, a / z);
    };
    auto k = [](const Params& p) {
      return std::pow(p.at("a"), p.at("alpha") - 1.0) * std::tgamma(1.0 - p.at("alpha"));
    };
    e.critical = [k](const Params& p) { return ExtendedReal::finite(k(p)); };
    e.conditions = rows_bounded("a^(alpha-1) Gamma(1-alpha)", k);
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "gamma3";
    e.tier = 2;
    e.equation =
        "Gamma(2 alpha + 1) z^alpha (exp(i (pi alpha + a z^(1/2))) Gamma(-2 alpha, i a z^(1/2)) + "
        "exp(-i (pi alpha + a z^(1/2))) Gamma(-2 alpha, -i a z^(1/2))) - b z - c = 0";
    e.density_text = "zeta^alpha exp(-a zeta^(1/2))";
    e.domain_text = "alpha>-1, 2 alpha not an integer, a>0";
    e.bound_text = "(2 a^(-2 alpha) Gamma(2 alpha) - c)/b > x > 0 if b>0, alpha>0";
    e.params = {{"alpha", -1.0, kInf, 0.75, -0.85, 2.4}, scale("a")};
    e.coupled = [](const Params& p) { return near_integer_gap(2.0 * p.at("alpha")) > 1e-3; };
    e.well_sampled = away_from_integers("alpha", 2.0);
    e.density = [](const Params& p) {
      const double al = p.at("alpha"), a = p.at("a");
      return power_density([=](double x) { return std::pow(x, al) * std::exp(-a * std::sqrt(x)); }, al,
                           kSuperPolynomial);
    };
    auto k = [](const Params& p) {
      return 2.0 * std::pow(p.at("a"), -2.0 * p.at("alpha")) * std::tgamma(2.0 * p.at("alpha"));
    };
    e.critical = [k](const Params& p) {
      return p.at("alpha") > 0 ? ExtendedReal::finite(k(p)) : ExtendedReal::infinity();
    };
    e.conditions = rows_split(
        "alpha>0", [](const Params& p) { return p.at("alpha") > 0; }, "0>=alpha>-1",
        "2 a^(-2 alpha) Gamma(2 alpha)", k);
    out.push_back(std::move(e));
  }

  // ---- digamma
  {
    CatalogEntry e;
    e.id = "psiG1";
    e.equation = "psi(w) - log(w) + 1/(2 w) + b z + c = 0, w = a z^(1/2)/(2 pi)";
    e.density_text = "1/(exp(a zeta^(1/2)) - 1)";
    e.domain_text = "a>0";
    e.bound_text = "none (critical value infinite)";
    e.sign = -1;
    e.params = {scale("a", 0.5, 4.0)};
    e.density = [](const Params& p) {
      const double a = p.at("a");
      return power_density([a](double x) { return 1.0 / std::expm1(a * std::sqrt(x)); }, -0.5, kSuperPolynomial);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double w = p.at("a") * std::sqrt(real_arg(z)) / (2.0 * pi);
      return cplx(std::log(w) - 1.0 / (2.0 * w) - special::digamma(w));
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "psiG2";
    e.equation = "psi(z^(1/2)/2 + 1/2) - psi(z^(1/2)/2) - z^(-1/2) - b z - c = 0";
    e.density_text = "1/sinh(pi zeta^(1/2))";
    e.domain_text = "none";
    e.bound_text = "none (critical value infinite)";
    e.density = [](const Params&) {
      return power_density([](double x) { return 1.0 / std::sinh(pi * std::sqrt(x)); }, -0.5, kSuperPolynomial);
    };
    e.stieltjes = [](const Params&, cplx z) {
      const double r = std::sqrt(real_arg(z));
      return cplx(special::digamma(r / 2.0 + 0.5) - special::digamma(r / 2.0) - 1.0 / r);
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "psiG3";
    e.equation = "z^(-1/2) (psi(z^(1/2)/2 + 3/4) - psi(z^(1/2)/2 + 1/4)) - b z - c = 0";
    e.density_text = "1/(zeta^(1/2) cosh(pi zeta^(1/2)))";
    e.domain_text = "none";
    e.bound_text = "none (critical value infinite)";
    e.density = [](const Params&) {
      return power_density([](double x) { return 1.0 / (std::sqrt(x) * std::cosh(pi * std::sqrt(x))); }, -0.5,
                           kSuperPolynomial);
    };
    e.stieltjes = [](const Params&, cplx z) {
      const double r = std::sqrt(real_arg(z));
      return cplx((special::digamma(r / 2.0 + 0.75) - special::digamma(r / 2.0 + 0.25)) / r);
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }

  // ---- hypergeometric and incomplete beta
  {
    CatalogEntry e;
    e.id = "hyp1";
    e.equation =
        "Gamma(alpha) Gamma(beta-alpha)/(a^(beta-1) Gamma(beta)) z^(alpha-1) 2F1(beta-1, alpha; beta; 1-z/a) - b z - c = 0";
    e.density_text = "zeta^(alpha-1)/(zeta + a)^(beta-1)";
    e.domain_text = "beta>alpha>0, alpha!=1, a>0";
    e.bound_text = "(a^(alpha-beta) Gamma(alpha-1) Gamma(beta-alpha)/Gamma(beta-1) - c)/b > x > 0 if b>0, beta>alpha>1";
    e.params = {{"alpha", 0.0, kInf, 0.5, 0.15, 2.8}, {"beta", 0.0, kInf, 1.5, 0.35, 5.3}, scale("a")};
    e.coupled = [](const Params& p) {
      const double al = p.at("alpha"), be = p.at("beta");
      return be - al > 0.2 && be - al < 2.5 && std::abs(al - 1.0) > 1e-3;
    };
    e.well_sampled = [](const Params& p) { return std::abs(p.at("alpha") - 1.0) > 0.05; };
    e.density = [](const Params& p) {
      const double al = p.at("alpha"), be = p.at("beta"), a = p.at("a");
      return power_density([=](double x) { return std::pow(x, al - 1.0) * std::pow(x + a, 1.0 - be); }, al - 1.0,
                           be - al);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double al = p.at("alpha"), be = p.at("beta"), a = p.at("a");
      const double pre = ratio_of_gammas(al, be - al, be, 1.0) / std::pow(a, be - 1.0);
      return pre * std::pow(z, al - 1.0) * special::hyp2f1(be - 1.0, al, be, 1.0 - z / a);
    };
    auto k = [](const Params& p) {
      const double al = p.at("alpha"), be = p.at("beta");
      return std::pow(p.at("a"), al - be) * ratio_of_gammas(al - 1.0, be - al, be - 1.0, 1.0);
    };
    e.critical = [k](const Params& p) {
      return p.at("alpha") > 1 ? ExtendedReal::finite(k(p)) : ExtendedReal::infinity();
    };
    e.conditions = rows_split(
        "beta>alpha>1", [](const Params& p) { return p.at("alpha") > 1; }, "1>=alpha>0",
        "a^(alpha-beta) Gamma(alpha-1) Gamma(beta-alpha)/Gamma(beta-1)", k);
    e.zero_free = ZeroFreeClaim{
        SpecialFunctionId::gauss_2F1, "2F1(beta-1, alpha; beta; 1-z/a) has no zero for beta>alpha>0, |arg z|<pi, z!=0",
        pi,
        [](const Params& p, cplx z) {
          const double al = p.at("alpha"), be = p.at("beta"), a = p.at("a");
          return special::hyp2f1(be - 1.0, al, be, 1.0 - z / a) * std::pow(1.0 + z / a, std::min(al, be - 1.0));
        },
        {}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "IB1";
    e.equation = "pi csc(pi alpha) z^(-alpha) (a - z)^(-beta) I_(1-z/a)(beta, alpha) - b z - c = 0";
    e.density_text = "zeta^(-alpha)/(zeta + a)^beta";
    e.domain_text = "1>alpha>-beta, alpha!=0, beta>0, a>0";
    e.bound_text = "(a^(-alpha-beta) Gamma(-alpha) Gamma(alpha+beta)/Gamma(beta) - c)/b > x > 0 if b>0, 0>alpha>-beta";
    e.params = {{"alpha", -kInf, 1.0, 0.5, -2.9, 0.85}, {"beta", 0.0, kInf, 1.0, 0.3, 3.0}, scale("a")};
    e.coupled = [](const Params& p) {
      const double al = p.at("alpha"), be = p.at("beta");
      return al + be > 0 && near_integer_gap(al) > 1e-3;
    };
    e.well_sampled = away_from_integers("alpha");
    e.density = [](const Params& p) {
      const double al = p.at("alpha"), be = p.at("beta"), a = p.at("a");
      return power_density([=](double x) { return std::pow(x, -al) * std::pow(x + a, -be); }, -al, al + be);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double al = p.at("alpha"), be = p.at("beta"), a = p.at("a");
      // I_w(beta, alpha) = w^beta 2F1(beta, 1-alpha; beta+1; w) / (beta B(beta, alpha)).
      const double inv_beta_fn = ratio_of_gammas(al + be, 1.0, be, al);
      return pi * csc(pi * al) * std::pow(z, -al) * std::pow(a, -be) * inv_beta_fn / be *
             special::hyp2f1(be, 1.0 - al, be + 1.0, 1.0 - z / a);
    };
    auto k = [](const Params& p) {
      const double al = p.at("alpha"), be = p.at("beta");
      return std::pow(p.at("a"), -al - be) * ratio_of_gammas(-al, al + be, be, 1.0);
    };
    e.critical = [k](const Params& p) {
      return p.at("alpha") < 0 ? ExtendedReal::finite(k(p)) : ExtendedReal::infinity();
    };
    e.conditions = rows_split(
        "0>alpha>-beta", [](const Params& p) { return p.at("alpha") < 0; }, "1>alpha>=0",
        "a^(-alpha-beta) Gamma(-alpha) Gamma(alpha+beta)/Gamma(beta)", k);
    e.zero_free = ZeroFreeClaim{
        SpecialFunctionId::gauss_2F1, "I_(1-z/a)(beta, alpha) has no zero for |arg z|<pi, z!=a, 0", pi,
        [](const Params& p, cplx z) {
          const double al = p.at("alpha"), be = p.at("beta"), a = p.at("a");
          return special::hyp2f1(be, 1.0 - al, be + 1.0, 1.0 - z / a) * std::pow(1.0 + z / a, std::min(be, 1.0 - al));
        },
        [](const Params& p) { return std::vector<cplx>{cplx(p.at("a"), 0.0)}; }};
    out.push_back(std::move(e));
  }

  // ---- exponential integrals
  {
    CatalogEntry e;
    e.id = "Ei1";
    e.equation = "exp(alpha z) Ei(-alpha z) + b z + c = 0";
    e.density_text = "exp(-alpha zeta)";
    e.domain_text = "alpha>0";
    e.bound_text = "none (critical value infinite)";
    e.sign = -1;
    e.params = {scale("alpha")};
    e.density = [](const Params& p) {
      const double al = p.at("alpha");
      return power_density([al](double x) { return std::exp(-al * x); }, 0.0, kSuperPolynomial);
    };
    e.stieltjes = [](const Params& p, cplx z) { return special::e1_scaled(p.at("alpha") * z); };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    e.zero_free = ZeroFreeClaim{SpecialFunctionId::exp_integral_E1, "Ei(-z) has no zero for |arg z|<pi, z!=0", pi,
                                [](const Params&, cplx z) { return special::e1_scaled(z); },
                                {}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "Ei2";
    e.equation = "exp(alpha z) (Ei(-alpha (z + d)) - Ei(-alpha z)) - b z - c = 0";
    e.density_text = "exp(-alpha zeta) on 0<zeta<d, 0 beyond";
    e.domain_text = "alpha>0, d>0";
    e.bound_text = "none (critical value infinite)";
    e.params = {scale("alpha"), scale("d")};
    e.density = [](const Params& p) {
      const double al = p.at("alpha");
      return power_density([al](double x) { return std::exp(-al * x); }, 0.0, kSuperPolynomial,
                           Support{0.0, p.at("d")});
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double al = p.at("alpha"), d = p.at("d");
      return special::e1_scaled(al * z) - std::exp(-al * d) * special::e1_scaled(al * (z + d));
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "Ei3";
    e.equation = "exp(alpha z) Ei(-alpha (z + d)) + b z + c = 0";
    e.density_text = "0 on 0<zeta<d, exp(-alpha zeta) beyond";
    e.domain_text = "alpha>0, d>0";
    e.bound_text = "(-Ei(-alpha d) - c)/b > x > 0 if b>0";
    e.sign = -1;
    e.params = {scale("alpha"), scale("d")};
    e.density = [](const Params& p) {
      const double al = p.at("alpha");
      return power_density([al](double x) { return std::exp(-al * x); }, 0.0, kSuperPolynomial,
                           Support{p.at("d"), kInf});
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double al = p.at("alpha"), d = p.at("d");
      return std::exp(-al * d) * special::e1_scaled(al * (z + d));
    };
    auto k = [](const Params& p) { return special::e1(cplx(p.at("alpha") * p.at("d"))).real(); };
    e.critical = [k](const Params& p) { return ExtendedReal::finite(k(p)); };
    e.conditions = rows_bounded("-Ei(-alpha d)", k);
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "Ei4";
    e.equation =
        "(-1)^(n+1) z^n exp(alpha z) Ei(-alpha z) + sum_(j=1..n) (-1)^(n-j) (j-1)! alpha^(-j) z^(n-j) - b z - c = 0";
    e.density_text = "zeta^n exp(-alpha zeta)";
    e.domain_text = "alpha>0, n a positive integer";
    e.bound_text = "((n-1)! alpha^(-n) - c)/b > x > 0 if b>0";
    e.params = {scale("alpha", 0.5, 3.0), {"n", 0.0, kInf, 1.0, 1.0, 3.0, true}};
    e.density = [](const Params& p) {
      const double al = p.at("alpha");
      const int n = static_cast<int>(p.at("n"));
      return power_density([=](double x) { return std::pow(x, n) * std::exp(-al * x); }, n, kSuperPolynomial);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double al = p.at("alpha");
      const int n = static_cast<int>(p.at("n"));
      const double sgn = n % 2 == 0 ? 1.0 : -1.0;
      cplx s = sgn * std::pow(z, n) * special::e1_scaled(al * z);
      double fact = 1.0;
      for (int j = 1; j <= n; ++j) {
        if (j > 1) fact *= j - 1;
        s += ((n - j) % 2 == 0 ? 1.0 : -1.0) * fact * std::pow(al, -j) * std::pow(z, n - j);
      }
      return s;
    };
    auto k = [](const Params& p) {
      return std::tgamma(p.at("n")) * std::pow(p.at("alpha"), -p.at("n"));
    };
    e.critical = [k](const Params& p) { return ExtendedReal::finite(k(p)); };
    e.conditions = rows_bounded("(n-1)! alpha^(-n)", k);
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "Ei5";
    e.equation = "(log(alpha gamma z) - exp(alpha z) Ei(-alpha z))/z - b z - c = 0, gamma = exp(C)";
    e.density_text = "(1 - exp(-alpha zeta))/zeta";
    e.domain_text = "alpha>0";
    e.bound_text = "none (critical value infinite)";
    e.params = {scale("alpha")};
    e.density = [](const Params& p) {
      const double al = p.at("alpha");
      return power_density([al](double x) { return -std::expm1(-al * x) / x; }, 0.0, 1.0);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double al = p.at("alpha");
      return (std::log(al * z) + kEulerC + special::e1_scaled(al * z)) / z;
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }

  // ---- error function
  {
    CatalogEntry e;
    e.id = "Erfc1";
    e.equation = "pi z^(-1/2) exp(a z) erfc((a z)^(1/2)) - b z - c = 0";
    e.density_text = "zeta^(-1/2) exp(-a zeta)";
    e.domain_text = "a>0";
    e.bound_text = "none (critical value infinite)";
    e.params = {scale("a")};
    e.density = [](const Params& p) {
      const double a = p.at("a");
      return power_density([a](double x) { return std::exp(-a * x) / std::sqrt(x); }, -0.5, kSuperPolynomial);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      return pi / std::sqrt(z) * special::erfcx(std::sqrt(p.at("a") * z));
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    e.zero_free = ZeroFreeClaim{SpecialFunctionId::erfc, "erfc(z) has no zero for |arg z|<pi/2", pi / 2.0,
                                [](const Params&, cplx z) { return special::erfcx(z); },
                                {}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "Erfc2";
    e.equation = "pi z^(1/2) exp(a z) erfc((a z)^(1/2)) - (pi/a)^(1/2) + b z + c = 0";
    e.density_text = "zeta^(1/2) exp(-a zeta)";
    e.domain_text = "a>0";
    e.bound_text = "((pi/a)^(1/2) - c)/b > x > 0 if b>0";
    e.sign = -1;
    e.params = {scale("a")};
    e.density = [](const Params& p) {
      const double a = p.at("a");
      return power_density([a](double x) { return std::exp(-a * x) * std::sqrt(x); }, 0.5, kSuperPolynomial);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double a = p.at("a");
      return std::sqrt(pi / a) - pi * std::sqrt(z) * special::erfcx(std::sqrt(a * z));
    };
    auto k = [](const Params& p) { return std::sqrt(pi / p.at("a")); };
    e.critical = [k](const Params& p) { return ExtendedReal::finite(k(p)); };
    e.conditions = rows_bounded("(pi/a)^(1/2)", k);
    out.push_back(std::move(e));
  }

  // ---- cosine and sine integrals
  {
    CatalogEntry e;
    e.id = "ci1";
    e.equation = "-2 cos(y) ci(y) - 2 sin(y) si(y) - b z - c = 0, y = a z^(1/2)";
    e.density_text = "exp(-a zeta^(1/2))";
    e.domain_text = "a>0";
    e.bound_text = "none (critical value infinite)";
    e.params = {scale("a")};
    e.density = [](const Params& p) {
      const double a = p.at("a");
      return power_density([a](double x) { return std::exp(-a * std::sqrt(x)); }, 0.0, kSuperPolynomial);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double y = p.at("a") * std::sqrt(real_arg(z));
      return cplx(-2.0 * std::cos(y) * special::ci(y) - 2.0 * std::sin(y) * special::si(y));
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "ci2";
    e.equation = "2 z^(-1/2) (cos(y) si(y) - sin(y) ci(y)) + b z + c = 0, y = a z^(1/2)";
    e.density_text = "zeta^(-1/2) exp(-a zeta^(1/2))";
    e.domain_text = "a>0";
    e.bound_text = "none (critical value infinite)";
    e.sign = -1;
    e.params = {scale("a")};
    e.density = [](const Params& p) {
      const double a = p.at("a");
      return power_density([a](double x) { return std::exp(-a * std::sqrt(x)) / std::sqrt(x); }, -0.5,
                           kSuperPolynomial);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      const double r = std::sqrt(real_arg(z));
      const double y = p.at("a") * r;
      return cplx(2.0 / r * (std::sin(y) * special::ci(y) - std::cos(y) * special::si(y)));
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }

  // ---- Whittaker and Bessel
  {
    CatalogEntry e;
    e.id = "whittaker";
    e.tier = 2;
    e.equation = "z^((alpha+beta)/2-1) exp(z/2) W_(-(alpha+beta)/2, (beta-alpha)/2)(z) - b z - c = 0";
    e.density_text =
        "zeta^((alpha+beta)/2-1) exp(-zeta/2) W_((alpha+beta)/2, (alpha-beta)/2)(zeta) / "
        "(Gamma(alpha+1/2) Gamma(beta+1/2))";
    e.domain_text = "alpha>-1/2 and 1/2>beta>-1/2, or beta>-1/2 and 1/2>alpha>-1/2; alpha!=beta";
    e.bound_text = "none (critical value infinite)";
    e.params = {{"alpha", -0.5, kInf, 0.25, -0.45, 2.0}, {"beta", -0.5, kInf, -0.25, -0.45, 0.45}};
    e.coupled = [](const Params& p) {
      const double al = p.at("alpha"), be = p.at("beta");
      return (be < 0.5 || al < 0.5) && std::abs(al - be) > 1e-3;
    };
    e.well_sampled = [](const Params& p) { return near_integer_gap(p.at("alpha") - p.at("beta")) > 0.05; };
    e.density = [](const Params& p) {
      const double al = p.at("alpha"), be = p.at("beta");
      const double norm = std::tgamma(al + 0.5) * std::tgamma(be + 0.5);
      // W_(k,m)(x) = exp(-x/2) x^(m+1/2) U(1/2+m-k, 1+2m, x)
      return power_density(
          [=](double x) {
            return std::pow(x, al - 0.5) * std::exp(-x) * special::kummer_u(0.5 - be, 1.0 + al - be, x) / norm;
          },
          std::min(al, be) - 0.5, kSuperPolynomial);
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "besselJY";
    e.tier = 2;
    e.sign = -1;
    e.equation =
        "(pi/2) J_alpha(a z) Y_alpha(a z) + a z Gamma(alpha-1/2)/(pi Gamma(alpha+3/2)) 2F3(1, 1; 3/2, alpha+3/2, "
        "3/2-alpha; -a^2 z^2) + pi (a z)^(2 alpha) tan(pi alpha)/(2^(2 alpha+1) Gamma^2(alpha+1)) 1F2(alpha+1/2; "
        "alpha+1, 2 alpha+1; -a^2 z^2) + b z + c = 0";
    e.density_text = "J_alpha(zeta)^2";
    e.domain_text = "alpha>-1/2, alpha!=0";
    e.bound_text = "(1/(2 alpha) - c)/b > x > 0 if b>0, alpha>0";
    e.params = {{"alpha", -0.5, kInf, 0.5, -0.4, 2.4}};
    e.coupled = [](const Params& p) { return std::abs(p.at("alpha")) > 1e-3; };
    e.well_sampled = [](const Params& p) { return std::abs(p.at("alpha")) > 0.05; };
    e.density = [](const Params& p) {
      const double al = p.at("alpha");
      return power_density(
          [al](double x) {
            const double j = special::bessel_j(al, x);
            return j * j;
          },
          2.0 * al, 1.0, {}, oscillating(1, pi));
    };
    auto k = [](const Params& p) { return 1.0 / (2.0 * p.at("alpha")); };
    e.critical = [k](const Params& p) {
      return p.at("alpha") > 0 ? ExtendedReal::finite(k(p)) : ExtendedReal::infinity();
    };
    e.conditions = rows_split(
        "alpha>0", [](const Params& p) { return p.at("alpha") > 0; }, "alpha<=0", "1/(2 alpha)", k);
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "besselK";
    e.equation = "(2 pi z)^(-1/2) exp(z) K_beta(z) - b z - c = 0";
    e.density_text = "cos(pi beta) exp(-zeta) K_beta(zeta) / (pi (2 pi zeta)^(1/2))";
    e.domain_text = "1/2>beta>-1/2, beta!=0";
    e.bound_text = "none (critical value infinite)";
    e.params = {{"beta", -0.5, 0.5, 0.25, -0.45, 0.45}};
    e.coupled = [](const Params& p) { return std::abs(p.at("beta")) > 1e-3; };
    e.well_sampled = [](const Params& p) { return std::abs(p.at("beta")) > 0.05; };
    e.density = [](const Params& p) {
      const double be = p.at("beta");
      const double pre = std::cos(pi * be) / (pi * std::sqrt(2.0 * pi));
      return power_density(
          [=](double x) {
            if (x > 700.0) return 0.0;
            return pre * std::exp(-x) * special::bessel_k(be, x) / std::sqrt(x);
          },
          -0.5 - std::abs(be), kSuperPolynomial);
    };
    e.stieltjes = [](const Params& p, cplx z) {
      return special::bessel_k_scaled(p.at("beta"), z) / std::sqrt(2.0 * pi * z);
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    e.zero_free = ZeroFreeClaim{SpecialFunctionId::bessel_K, "K_beta(z) has no zero for |arg z|<pi, z!=0, 1/2>beta>-1/2",
                                pi,
                                [](const Params& p, cplx z) {
                                  return special::bessel_k_scaled(p.at("beta"), z) * std::sqrt(2.0 * z / pi);
                                },
                                {}};
    out.push_back(std::move(e));
  }

  // ---- Lambert W
  {
    CatalogEntry e;
    e.id = "W1";
    e.equation = "W(z)/z - b z - c = 0";
    e.density_text = "Im W(-t)/(pi t) on t>1/e";
    e.domain_text = "none";
    e.bound_text = "(1 - c)/b > x > 0 if b>0 (the displayed bound e is looser)";
    e.density = [](const Params&) {
      return power_density(
          [](double t) {
            if (t <= 1.0 / std::numbers::e) return 0.0;
            return special::lambert_w0_upper_cut(t).imag() / (pi * t);
          },
          0.5, 1.0, Support{1.0 / std::numbers::e, kInf});
    };
    e.stieltjes = [](const Params&, cplx z) { return special::lambert_w0(z) / z; };
    e.critical = [](const Params&) { return ExtendedReal::finite(1.0); };
    e.conditions = rows_bounded("int_(1/e)^inf Im W(-t)/(pi t^2) dt", [](const Params&) { return 1.0; });
    e.zero_free = ZeroFreeClaim{SpecialFunctionId::lambert_W0, "W(z) has no zero for |arg z|<pi, z!=0", pi,
                                [](const Params&, cplx z) { return special::lambert_w0(z); },
                                {}};
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.id = "W2";
    e.equation = "W'(z) - b z - c = 0";
    e.density_text = "(1/pi) d/dt Im W(-t) on t>1/e";
    e.domain_text = "none";
    e.bound_text = "(1 - c)/b > x > 0 if b>0";
    e.density = [](const Params&) {
      return power_density(
          [](double t) {
            if (t <= 1.0 / std::numbers::e) return 0.0;
            const cplx w = special::lambert_w0_upper_cut(t);
            return (w / (1.0 + w)).imag() / (pi * t);
          },
          -0.5, 1.0, Support{1.0 / std::numbers::e, kInf});
    };
    e.stieltjes = [](const Params&, cplx z) { return special::lambert_w0_prime(z); };
    e.critical = [](const Params&) { return ExtendedReal::finite(1.0); };
    e.conditions =
        rows_bounded("int_(1/e)^inf (1/(pi t)) d/dt Im W(-t) dt", [](const Params&) { return 1.0; });
    e.zero_free = ZeroFreeClaim{SpecialFunctionId::lambert_W0, "W'(z) has no zero for |arg z|<pi, z!=0", pi,
                                [](const Params&, cplx z) { return special::lambert_w0_prime(z); },
                                {}};
    out.push_back(std::move(e));
  }

  // ---- Binet
  {
    CatalogEntry e;
    e.id = "binet";
    e.equation = "J(z^(1/2))/z^(1/2) - b z - c = 0";
    e.density_text = "log(1/(1 - exp(-2 pi zeta^(1/2)))) / (2 pi zeta^(1/2))";
    e.domain_text = "none";
    e.bound_text = "none (critical value infinite)";
    e.density = [](const Params&) {
      return power_density(
          [](double x) {
            const double r = std::sqrt(x);
            return -std::log(-std::expm1(-2.0 * pi * r)) / (2.0 * pi * r);
          },
          -0.5, kSuperPolynomial, {}, with_log());
    };
    e.stieltjes = [](const Params&, cplx z) {
      const cplx r = std::sqrt(z);
      return special::binet(r) / r;
    };
    e.critical = [](const Params&) { return ExtendedReal::infinity(); };
    e.conditions = rows_unbounded();
    e.zero_free = ZeroFreeClaim{SpecialFunctionId::binet_J, "J(z) has no zero for |arg z|<pi/2, z!=0", pi / 2.0,
                                [](const Params&, cplx z) { return special::binet(z); },
                                {}};
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& registry() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

}  // namespace stieltjes::detail
