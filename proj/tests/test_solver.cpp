#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/solver.hpp"

using namespace stieltjes;
using std::numbers::pi;

namespace {

Density expo() { return make_density([](double z) { return std::exp(-z); }, 0.0, kSuperPolynomial); }
Density inv_sqrt() { return make_density([](double z) { return 1.0 / std::sqrt(z); }, -0.5, 0.5); }
Density p2() { return make_density([](double z) { return std::sqrt(z) / (z + 1.0); }, 0.5, 0.5); }

// Direct transcription of the two existence conditions.
Outcome table(bool mz_inf, double mz, double b, double c) {
  const bool m_pos = mz_inf || mz - c > 0.0;
  if (b > 0.0 && m_pos) return Outcome::UniqueRoot;
  if (b == 0.0 && m_pos && c > 0.0) return Outcome::UniqueRoot;
  return Outcome::NoSolution;
}

}  // namespace

TEST_CASE("classify examples") {
  const Classification a = classify(ExtendedReal::infinity(), 2.0, 5.0);
  CHECK(a.outcome == Outcome::UniqueRoot);
  CHECK(std::isinf(a.hi));
  const Classification b = classify(ExtendedReal::finite(pi), 1.0, 4.0);
  CHECK(b.outcome == Outcome::NoSolution);
  CHECK(b.reason == Reason::m_nonpositive);
  const Classification c = classify(ExtendedReal::finite(pi), 0.0, -1.0);
  CHECK(c.reason == Reason::c_nonpositive_b_zero);
  const Classification d = classify(ExtendedReal::finite(pi), 1.0, 0.0);
  CHECK(d.outcome == Outcome::UniqueRoot);
  CHECK(d.hi == doctest::Approx(pi));
  CHECK(classify(ExtendedReal::finite(pi), 0.0, 4.0).reason == Reason::c_exceeds_mass);
  CHECK_THROWS_AS(classify(ExtendedReal::finite(1.0), -1.0, 0.0), Error);
}

TEST_CASE("classify agrees with the truth table, boundaries included") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 500; ++i) {
    const bool inf = i % 5 == 0;
    const double mz = std::abs(u(gen));
    const double b = i % 3 == 0 ? 0.0 : std::abs(u(gen));
    const double c = u(gen);
    const ExtendedReal m = inf ? ExtendedReal::infinity() : ExtendedReal::finite(mz);
    CHECK(classify(m, b, c).outcome == table(inf, mz, b, c));
  }
  CHECK(classify(ExtendedReal::finite(2.0), 1.0, 2.0).outcome == Outcome::NoSolution);
  CHECK(classify(ExtendedReal::finite(2.0), 0.0, 2.0).outcome == Outcome::NoSolution);
  CHECK(classify(ExtendedReal::finite(2.0), 0.0, 0.0).outcome == Outcome::NoSolution);
  CHECK(classify(ExtendedReal::infinity(), 0.0, 0.0).outcome == Outcome::NoSolution);
}

TEST_CASE("solve_real on analytic residuals") {
  // pi x^(-1/2) = x.
  auto F = [](double x) { return pi / std::sqrt(x) - x; };
  const SolveReport r = solve_real(F, classify(ExtendedReal::infinity(), 1.0, 0.0), 1e-12);
  REQUIRE(r.root);
  CHECK(oracle::rel(*r.root, std::pow(pi, 2.0 / 3.0)) < 1e-12);
  CHECK(oracle::rel(*r.root, oracle::bisect(F, 1e-3, 1e3)) < 1e-12);

  auto G = [](double x) { return oracle::e1_scaled(x) - 0.5; };
  const SolveReport e = solve_real(G, classify(ExtendedReal::infinity(), 0.0, 0.5), 1e-12);
  REQUIRE(e.root);
  CHECK(*e.root > 1.0);
  CHECK(*e.root < 1.5);
  CHECK(oracle::rel(*e.root, oracle::bisect(G, 1e-3, 1e3)) < 1e-11);

  auto H = [](double x) { return 1.0 / x; };
  CHECK_THROWS_AS(solve_real(H, classify(ExtendedReal::infinity(), 0.0, 1.0), 1e-12), Error);
}

TEST_CASE("solve_equation examples") {
  const SolveReport a = solve_equation(inv_sqrt(), 1.0, 0.0);
  CHECK(a.classification.outcome == Outcome::UniqueRoot);
  REQUIRE(a.root);
  CHECK(oracle::rel(*a.root, std::pow(pi, 2.0 / 3.0)) < 1e-10);
  CHECK(a.tolerance_met);
  CHECK(a.critical_value.is_infinite());

  CHECK(solve_equation(expo(), 0.0, -1.0).classification.outcome == Outcome::NoSolution);

  const Density zero = make_density([](double) { return 0.0; }, 0.0, 1.0);
  const SolveReport d = solve_equation(zero, 0.0, 0.0);
  CHECK(d.classification.outcome == Outcome::Degenerate);
  CHECK(d.classification.reason == Reason::zero_density_zero_b);
  CHECK_FALSE(d.root);

  const SolveReport p = solve_equation(p2(), 1.0, 0.0);
  REQUIRE(p.root);
  CHECK(*p.root > 0.0);
  CHECK(*p.root < pi);
  CHECK(p.bound_ok);
  CHECK(std::abs(*p.residual) <= 1e-10);
}

TEST_CASE("bisection-only and polished roots agree") {
  SolveOptions plain;
  plain.polish = false;
  for (double c : {-1.0, 0.5, 2.0}) {
    const SolveReport a = solve_equation(p2(), 0.7, c);
    const SolveReport b = solve_equation(p2(), 0.7, c, kDefaultRelTol, plain);
    REQUIRE(a.root);
    REQUIRE(b.root);
    CHECK(oracle::rel(*a.root, *b.root) < 1e-10);
  }
}

TEST_CASE("boundary flip around the critical value") {
  const double mz = mass_over_zeta(p2()).value();
  CHECK(solve_equation(p2(), 0.0, mz * (1.0 - 1e-6)).classification.outcome == Outcome::UniqueRoot);
  CHECK(solve_equation(p2(), 0.0, mz * (1.0 + 1e-6)).classification.outcome == Outcome::NoSolution);
}

TEST_CASE("corollary forms") {
  const SolveReport t1 = solve_corollary_form(expo(), {TransformTag::T1, 2.0}, 1.0, 0.0);
  CHECK(t1.classification.outcome == Outcome::UniqueRoot);
  CHECK(t1.critical_value.is_infinite());
  REQUIRE(t1.root);
  // g(2x) = x with g(x) = e^x E1(x).
  CHECK(oracle::rel(*t1.root, oracle::bisect([](double x) { return oracle::e1_scaled(2 * x) - x; }, 1e-6, 10.0)) < 1e-9);

  CHECK(solve_corollary_form(expo(), {TransformTag::T2}, 1.0, -1.0).classification.outcome ==
        Outcome::NoSolution);
  const SolveReport t2 = solve_corollary_form(expo(), {TransformTag::T2}, 1.0, 0.5);
  CHECK(t2.classification.outcome == Outcome::UniqueRoot);
  REQUIRE(t2.root);
  CHECK(*t2.root < 0.5);
  CHECK(t2.bound_ok);
  CHECK(t2.critical_value.value() == 0.5);
  auto t2_oracle = [](double x) { return 0.5 - x * oracle::e1_scaled(x) - x; };
  CHECK(oracle::rel(*t2.root, oracle::bisect(t2_oracle, 1e-9, 0.5)) < 1e-9);

  // T3: (g(x) - g(1))/(x - 1) + x + c = 0 with c < 0.
  const SolveReport t3 = solve_corollary_form(expo(), {TransformTag::T3, 1.0}, 1.0, -0.3);
  REQUIRE(t3.root);
  auto g = [](double x) { return oracle::e1_scaled(x); };
  const double x3 = *t3.root;
  CHECK(std::abs((g(x3) - g(1.0)) / (x3 - 1.0) + x3 - 0.3) < 1e-9);

  // T4: g(1/x)/x - x - c = 0.
  const SolveReport t4 = solve_corollary_form(expo(), {TransformTag::T4, 1.0}, 1.0, 0.1);
  REQUIRE(t4.root);
  CHECK(std::abs(g(1.0 / *t4.root) / *t4.root - *t4.root - 0.1) < 1e-9);
}

TEST_CASE("corollary combinations reproduce the transformed transforms") {
  const Density e = expo();
  auto g = [&](cplx z) { return stieltjes_transform(e, CutPlanePoint(z)).value; };
  for (TransformKind k : {TransformKind{TransformTag::T1, 2.0}, TransformKind{TransformTag::T2},
                          TransformKind{TransformTag::T3, 1.0}, TransformKind{TransformTag::T4, 1.0},
                          TransformKind{TransformTag::T5}}) {
    const Density t = apply_transform(e, k);
    for (double x : {0.3, 1.0, 1.00001, 4.0}) {
      const cplx want = stieltjes_transform(t, CutPlanePoint(x)).value;
      const cplx got = corollary_stieltjes_part(k, g, 1.0, x);
      CHECK(std::abs(got - want) <= 1e-8 * std::abs(want));
    }
  }
}

TEST_CASE("composed chain") {
  const std::vector<TransformKind> chain{{TransformTag::T1, 2.0}, {TransformTag::T3, 1.0}};
  const SolveReport r = solve_composed(expo(), chain, 1.0, 0.0);
  CHECK(r.classification.outcome == Outcome::UniqueRoot);
  CHECK(r.bound_ok);
}

TEST_CASE("off-axis sign") {
  const Density e = expo();
  const cplx z(1.0, 1.0);
  CHECK(stieltjes_transform(e, CutPlanePoint(z)).value.imag() - 1.0 * z.imag() < 0.0);
  CHECK(stieltjes_transform(e, CutPlanePoint(std::conj(z))).value.imag() > 0.0);
  const OffAxisReport rep = verify_no_offaxis_roots(e, 1.0, 0.0, 100);
  CHECK(rep.samples == 100);
  CHECK(rep.violations == 0);
  CHECK(rep.min_magnitude > 0.0);
  const Density zero = make_density([](double) { return 0.0; }, 0.0, 1.0);
  CHECK(verify_no_offaxis_roots(zero, 1.0, 0.0, 100).vacuous);
}
