#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "oracles.hpp"
#include "stieltjes/catalog.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/quadrature.hpp"
#include "stieltjes/zero_free.hpp"

using namespace stieltjes;
using std::numbers::pi;

namespace {

std::vector<double> grid() { return log_spaced(0.1, 10.0, 20); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::NotFound;
}

}  // namespace

TEST_CASE("roster") {
  const auto all = list_entries();
  CHECK(all.size() == 36);
  const std::set<std::string> want{"e1",     "e2",     "hyperbolic1", "p1",    "p2",       "p3",      "l1",
                                   "l2",     "l3",     "l4",          "l5",    "l6",       "l7",      "gamma1",
                                   "gamma2", "gamma3", "psiG1",       "psiG2", "psiG3",    "hyp1",    "IB1",
                                   "Ei1",    "Ei2",    "Ei3",         "Ei4",   "Ei5",      "Erfc1",   "Erfc2",
                                   "ci1",    "ci2",    "whittaker",   "besselJY", "besselK", "W1",    "W2",
                                   "binet"};
  std::set<std::string> got, tier2;
  for (const auto& s : all) {
    got.insert(s.id);
    if (s.tier == 2) tier2.insert(s.id);
  }
  CHECK(got == want);
  CHECK(tier2 == std::set<std::string>{"gamma3", "whittaker", "besselJY"});
  CHECK(kind_of([] { find_entry("nonexistent"); }) == ErrorKind::NotFound);
}

TEST_CASE("sign flags") {
  for (const char* id : {"l1", "l2", "psiG1", "Ei1"}) CHECK(find_entry(id).sign == -1);
  for (const char* id : {"e1", "p2", "l3", "Erfc1", "W1"}) CHECK(find_entry(id).sign == 1);
  // log(a/x)/(x - a) + b x + c, written out.
  const auto& l1 = find_entry("l1");
  const Params p{{"a", 2.0}};
  for (double x : {0.3, 1.7, 6.0}) {
    const double direct = std::log(2.0 / x) / (x - 2.0) + 0.5 * x + 0.25;
    CHECK(printed_lhs(l1, p, x, 0.5, 0.25) == doctest::Approx(direct).epsilon(1e-14));
  }
}

TEST_CASE("parameter resolution") {
  const auto& p2 = find_entry("p2");
  CHECK(kind_of([&] { resolve_params(p2, {{"gamma", 1.0}}); }) == ErrorKind::BadParameter);
  CHECK(kind_of([&] { resolve_params(p2, {{"alpha", 1.5}}); }) == ErrorKind::DomainError);
  CHECK(kind_of([&] { resolve_params(p2, {{"alpha", 0.0}}); }) == ErrorKind::DomainError);
  CHECK(kind_of([&] { resolve_params(find_entry("Ei4"), {{"n", 1.5}}); }) == ErrorKind::DomainError);
  CHECK(kind_of([&] { resolve_params(find_entry("hyp1"), {{"alpha", 2.0}, {"beta", 1.0}}); }) ==
        ErrorKind::DomainError);
  const Params p = resolve_params(p2, {{"a", 2.0}});
  CHECK(p.at("a") == 2.0);
  CHECK(p.count("alpha") == 1);
  std::mt19937 gen(3);
  for (const auto& e : catalog()) {
    for (int i = 0; i < 5; ++i) CHECK_NOTHROW(resolve_params(e, sample_params(e, gen)));
  }
}

TEST_CASE("cross_validate examples") {
  CHECK(cross_validate("p1", {{"alpha", 0.5}}, grid()) <= 1e-10);
  CHECK(cross_validate("Ei1", {{"alpha", 1.0}}, grid()) <= 1e-8);
  CHECK(cross_validate("Erfc1", {{"a", 1.0}}, grid()) <= 1e-8);
  for (const char* id : {"gamma3", "whittaker", "besselJY"}) {
    CHECK(kind_of([&] { cross_validate(id, {}, grid()); }) == ErrorKind::TierMismatch);
  }
}

TEST_CASE("closed forms against independent formulas") {
  const auto& p1 = find_entry("p1");
  const auto& ei1 = find_entry("Ei1");
  const auto& erfc1 = find_entry("Erfc1");
  const auto& l3 = find_entry("l3");
  for (double x : grid()) {
    CHECK(p1.stieltjes({{"alpha", 0.5}}, x).real() == doctest::Approx(pi / std::sqrt(x)).epsilon(1e-14));
    CHECK(oracle::rel(ei1.stieltjes({{"alpha", 1.3}}, x).real(), oracle::e1_scaled(1.3 * x)) < 1e-13);
    const double ef = pi / std::sqrt(x) * std::exp(x) * std::erfc(std::sqrt(x));
    CHECK(oracle::rel(erfc1.stieltjes({{"a", 1.0}}, x).real(), ef) < 1e-12);
    const double l3v = (x * std::log(x / 2.0) + pi) / (x * x + 4.0);
    CHECK(oracle::rel(l3.stieltjes({{"a", 2.0}}, x).real(), l3v) < 1e-14);
  }
}

TEST_CASE("cone identity on every tier-1 entry") {
  std::mt19937 gen(11);
  for (const auto& e : catalog()) {
    if (e.tier != 1) continue;
    for (int d = 0; d < 2; ++d) {
      const Params p = d == 0 ? resolve_params(e, {}) : sample_params(e, gen);
      INFO(e.id);
      CHECK(cross_validate(e.id, p, grid()) <= 1e-7);
    }
  }
}

TEST_CASE("critical formula matches mass over zeta") {
  std::mt19937 gen(5);
  for (const auto& e : catalog()) {
    for (int d = 0; d < 3; ++d) {
      const Params p = d == 0 ? resolve_params(e, {}) : sample_params(e, gen);
      INFO(e.id);
      const ExtendedReal k = e.critical(p);
      const ExtendedReal m = mass_over_zeta(e.density(p));
      REQUIRE(k.is_infinite() == m.is_infinite());
      if (k.is_finite()) CHECK(oracle::rel(m.value(), k.value()) <= 1e-8);
    }
  }
}

TEST_CASE("condition rows are mutually exclusive") {
  std::mt19937 gen(9);
  for (const auto& e : catalog()) {
    for (int d = 0; d < 4; ++d) {
      const Params p = sample_params(e, gen);
      for (double b : {0.0, 0.5}) {
        for (double c : {-1.0, 0.0, 0.3, 1.0, 3.0, 50.0}) {
          const auto n = std::count_if(e.conditions.begin(), e.conditions.end(),
                                       [&](const ConditionRow& r) { return r.applies(p, b, c); });
          INFO(e.id << " b=" << b << " c=" << c);
          CHECK(n <= 1);
        }
      }
    }
  }
}

TEST_CASE("solve_entry examples") {
  const auto l3 = solve_entry("l3", {{"a", 1.0}}, 0.0, pi / 2.0 + 0.1);
  CHECK(l3.report.classification.outcome == Outcome::NoSolution);
  CHECK(l3.table_check);

  const auto l4 = solve_entry("l4", {{"a", 1.0}}, 1.0, 0.0);
  REQUIRE(l4.report.root);
  CHECK(*l4.report.root < 2.0 * pi);
  const double want = oracle::bisect(
      [](double x) { return 2.0 * pi / std::sqrt(x) * std::log(std::sqrt(x) + 1.0) - x; }, 1e-6, 2.0 * pi);
  CHECK(oracle::rel(*l4.report.root, want) < 1e-9);
  CHECK(l4.table_check);

  const auto ei4 = solve_entry("Ei4", {{"alpha", 1.0}, {"n", 1.0}}, 0.0, 0.5);
  CHECK(ei4.report.classification.outcome == Outcome::UniqueRoot);
  CHECK(!ei4.bound);
  // 1 - x e^x E1(x) = 0.5
  const double ei4_root = oracle::bisect([](double x) { return 1.0 - x * oracle::e1_scaled(x) - 0.5; }, 1e-8, 50.0);
  CHECK(oracle::rel(*ei4.report.root, ei4_root) < 1e-8);
  CHECK(ei4.table_check);
}

TEST_CASE("roots respect the printed bound") {
  std::mt19937 gen(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& e : catalog()) {
    const Params p = sample_params(e, gen);
    const ExtendedReal k = e.critical(p);
    if (k.is_infinite()) continue;
    const double b = 0.1 + 2.0 * u(gen);
    const double c = k.value() * (u(gen) - 0.5);
    const auto r = solve_entry(e.id, p, b, c);
    INFO(e.id);
    REQUIRE(r.report.root);
    CHECK(*r.report.root > 0.0);
    CHECK(*r.report.root < (k.value() - c) / b);
    CHECK(r.table_check);
  }
}

TEST_CASE("boundary flip at the critical value") {
  for (const auto& e : catalog()) {
    const Params p = resolve_params(e, {});
    const ExtendedReal k = e.critical(p);
    if (k.is_infinite()) continue;
    INFO(e.id);
    const auto below = solve_entry(e.id, p, 0.0, k.value() * (1.0 - 1e-4));
    const auto above = solve_entry(e.id, p, 0.0, k.value() * (1.0 + 1e-4));
    CHECK(below.report.classification.outcome == Outcome::UniqueRoot);
    CHECK(above.report.classification.outcome == Outcome::NoSolution);
    CHECK(below.table_check);
    CHECK(above.table_check);
  }
}

TEST_CASE("removable points") {
  const std::vector<std::pair<std::string, Params>> cases{
      {"p2", {{"alpha", 0.4}, {"a", 1.7}}},
      {"p2", {{"alpha", -0.6}, {"a", 0.8}}},
      {"l1", {{"a", 2.5}}},
      {"l6", {{"alpha", 0.3}, {"a", 1.2}}},
      {"l7", {{"alpha", 0.6}, {"a", 0.9}}},
      {"l7", {{"alpha", -0.45}, {"a", 2.0}}},
  };
  for (const auto& [id, p] : cases) {
    INFO(id);
    const auto& e = find_entry(id);
    const double a = p.at("a");
    const double ext = e.extension_value(p);
    // Quadrature of the density at z = a knows nothing about the closed form.
    const double q = stieltjes_transform(e.density(p), CutPlanePoint(a)).value.real();
    CHECK(oracle::rel(ext, q) < 1e-9);
    CHECK(std::isfinite(e.stieltjes(p, a).real()));
    CHECK(oracle::rel(e.stieltjes(p, a).real(), ext) < 1e-12);
    for (double s : {1e-6, -1e-6, 5e-5, -5e-5, 2e-4}) {
      const double x = a * (1.0 + s);
      const double qx = stieltjes_transform(e.density(p), CutPlanePoint(x)).value.real();
      CHECK(oracle::rel(e.stieltjes(p, x).real(), qx) < 1e-9);
    }
  }
}

TEST_CASE("zero-free scans") {
  const auto radii = log_spaced(0.1, 10.0, 20);
  const auto ei = zero_free_scan("Ei1", {{"alpha", 1.0}}, radii, 64);
  CHECK(ei.min_abs > 0.0);
  CHECK(ei.violations.empty());
  CHECK(ei.verdict() == "no zero found on grid");
  CHECK(ei.half_angle == doctest::Approx(0.99 * pi));
  CHECK(zero_free_scan("Erfc1", {}, radii, 64).clean());
  CHECK(zero_free_scan("Erfc1", {}, radii, 64).half_angle == doctest::Approx(0.49 * pi));
  CHECK(zero_free_scan("besselK", {{"beta", 0.49}}, radii, 64).clean());
  CHECK(zero_free_scan("IB1", {{"alpha", -0.5}, {"beta", 1.5}, {"a", 1.0}}, radii, 64).clean());
  CHECK(kind_of([&] { zero_free_scan("e1", {}, radii, 64); }) == ErrorKind::NoClaim);
}

TEST_CASE("sector scan detects zeros") {
  const auto radii = log_spaced(0.1, 10.0, 20);
  const auto lin = scan_sector([](cplx z) { return z - 2.0; }, 0.5 * pi, {1.0, 2.0, 4.0}, 65);
  CHECK(lin.enclosed_zeros == 1);
  CHECK(!lin.clean());
  CHECK(lin.violations.size() == 1);
  // erfc has zeros near arg z = +-0.69 pi, outside the claimed sector.
  const auto wide = scan_sector([](cplx z) { return special::erfcx(z); }, 0.9 * pi, radii, 64);
  CHECK(wide.enclosed_zeros >= 2);
  CHECK(wide.verdict() != "no zero found on grid");
  const auto narrow = scan_sector([](cplx z) { return special::erfcx(z); }, 0.49 * pi, radii, 64);
  CHECK(narrow.clean());
  // Points near an excluded location are skipped.
  const auto ex = scan_sector([](cplx z) { return z - 2.0; }, 0.5 * pi, {2.0}, 65, {cplx(2.0, 0.0)});
  CHECK(ex.violations.empty());
  CHECK(ex.points < 65);
}

TEST_CASE("reference document") {
  const std::string doc = catalog_reference();
  for (const auto& e : catalog()) CHECK(doc.find("## " + e.id + "\n") != std::string::npos);
  CHECK(doc.find("no zero for |arg z|<pi/2") != std::string::npos);
}
