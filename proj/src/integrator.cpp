#include "stieltjes/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace stieltjes {

namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208768438843, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for kXgk[1], kXgk[3], ..., kXgk[9].
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a;
  double b;
  cplx value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

}  // namespace

KronrodPanel kronrod21(const ComplexIntegrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<cplx, 21> fv;
  fv[10] = f(center);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = f(center - dx);
    fv[20 - j] = f(center + dx);
  }
  cplx kron = kWgk[10] * fv[10];
  cplx gauss = 0.0;
  double resabs = kWgk[10] * std::abs(fv[10]);
  for (int j = 0; j < 10; ++j) {
    kron += kWgk[j] * (fv[j] + fv[20 - j]);
    resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[20 - j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * (fv[j] + fv[20 - j]);
  }
  const cplx mean = 0.5 * kron;
  double resasc = kWgk[10] * std::abs(fv[10] - mean);
  for (int j = 0; j < 10; ++j)
    resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[20 - j] - mean));

  const double scale = std::abs(half);
  kron *= half;
  gauss *= half;
  resabs *= scale;
  resasc *= scale;

  double err = std::abs(kron - gauss);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
    err = std::max(err, 50.0 * kEps * resabs);
  if (!std::isfinite(std::abs(kron))) err = std::numeric_limits<double>::infinity();
  return {kron, gauss, err};
}

QuadResult integrate_adaptive(const ComplexIntegrand& f, std::span<const double> breaks,
                              const IntegrationOptions& options) {
  if (breaks.size() < 2) throw std::invalid_argument("integrate_adaptive: need two breakpoints");
  std::priority_queue<Panel> heap;
  cplx total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    if (!(b > a)) continue;
    const KronrodPanel p = kronrod21(f, a, b);
    heap.push({a, b, p.kronrod, p.error});
    total += p.kronrod;
    total_err += p.error;
  }

  auto satisfied = [&] {
    return total_err <= std::max(options.abs_tol, options.rel_tol * std::abs(total));
  };

  const int cap = std::max<int>(options.max_panels, static_cast<int>(breaks.size()));
  bool converged = true;
  while (!heap.empty() && !satisfied()) {
    if (static_cast<int>(heap.size()) >= cap) {
      converged = false;
      break;
    }
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval can no longer be split in double precision.
      converged = false;
      break;
    }
    heap.pop();
    const KronrodPanel left = kronrod21(f, worst.a, mid);
    const KronrodPanel right = kronrod21(f, mid, worst.b);
    total += left.kronrod + right.kronrod - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push({worst.a, mid, left.kronrod, left.error});
    heap.push({mid, worst.b, right.kronrod, right.error});
  }

  // Re-sum to shed the drift accumulated by the incremental updates.
  cplx resum = 0.0;
  double err = 0.0;
  int panels = static_cast<int>(heap.size());
  while (!heap.empty()) {
    resum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  QuadResult out;
  out.value = resum;
  out.err_estimate = err;
  out.subdivisions = panels;
  out.converged = converged && std::isfinite(err) &&
                  err <= std::max(options.abs_tol, options.rel_tol * std::abs(resum)) * 1.0000001;
  return out;
}

QuadResult integrate_adaptive(const ComplexIntegrand& f, double a, double b,
                              const IntegrationOptions& options) {
  const std::array<double, 2> breaks{a, b};
  return integrate_adaptive(f, breaks, options);
}

}  // namespace stieltjes
