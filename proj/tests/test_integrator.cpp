#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "stieltjes/integrator.hpp"

using namespace stieltjes;

TEST_CASE("polynomials of degree <= 31 are exact on one panel") {
  const KronrodPanel p = kronrod21([](double x) { return cplx(std::pow(x, 30)); }, 0.0, 1.0);
  CHECK(std::abs(p.kronrod.real() - 1.0 / 31.0) < 1e-15);
}

TEST_CASE("smooth complex integrand") {
  auto f = [](double x) { return std::exp(cplx(0.0, x)); };
  const QuadResult r = integrate_adaptive(f, 0.0, std::numbers::pi);
  CHECK(r.converged);
  CHECK(std::abs(r.value - cplx(0.0, 2.0)) < 1e-13);
}

TEST_CASE("integrable endpoint singularity converges by subdivision") {
  auto f = [](double x) { return cplx(std::log(x)); };
  const QuadResult r = integrate_adaptive(f, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value.real() + 1.0) < 1e-10);
}

TEST_CASE("breakpoints split the work") {
  auto f = [](double x) { return cplx(std::abs(x - 0.3)); };
  const std::vector<double> br{0.0, 0.3, 1.0};
  const QuadResult r = integrate_adaptive(f, br);
  CHECK(std::abs(r.value.real() - (0.045 + 0.245)) < 1e-14);
  CHECK(r.subdivisions == 2);
}

TEST_CASE("panel cap clears the converged flag") {
  IntegrationOptions o;
  o.max_panels = 4;
  auto f = [](double x) { return cplx(std::sin(1.0 / x)); };
  const QuadResult r = integrate_adaptive(f, 1e-6, 1.0, o);
  CHECK_FALSE(r.converged);
  CHECK(r.err_estimate > 0.0);
}
