#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hcwalk/summation.hpp"

namespace hcwalk::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;  // sum of |K21 - G10| over the final partition
  bool converged = true;
  std::size_t evaluations = 0;
};

struct Tolerance {
  double abs = 1e-15;
  double rel = 1e-12;
  std::size_t max_intervals = 4000;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Weights of the Gauss nodes kKronrodNodes[1], [3], ..., [9].
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename F>
Panel gauss_kronrod_21(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[10];
  double gauss = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (21/10) quadrature of f over [a, b].
///
/// `breakpoints` is an optional increasing list of interior points used as
/// the initial partition; oscillatory integrands should pass roughly one
/// point per half-period so that no panel starts out under-resolved.
template <typename F>
Result integrate(F&& f, double a, double b, const Tolerance& tol = {},
                 const std::vector<double>& breakpoints = {}) {
  std::vector<detail::Panel> heap;
  Result out;
  double value = 0.0;
  double error = 0.0;
  auto push = [&](double lo, double hi) {
    const detail::Panel panel = detail::gauss_kronrod_21(f, lo, hi);
    heap.push_back(panel);
    std::push_heap(heap.begin(), heap.end());
    value += panel.value;
    error += panel.error;
    out.evaluations += 21;
  };
  double left = a;
  for (double p : breakpoints) {
    if (p > left && p < b) {
      push(left, p);
      left = p;
    }
  }
  if (b > left) push(left, b);

  while (error > std::max(tol.abs, tol.rel * std::abs(value))) {
    if (heap.size() >= tol.max_intervals) {
      out.converged = false;
      break;
    }
    std::pop_heap(heap.begin(), heap.end());
    const detail::Panel worst = heap.back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      std::push_heap(heap.begin(), heap.end());
      out.converged = false;
      break;
    }
    heap.pop_back();
    value -= worst.value;
    error -= worst.error;
    push(worst.a, mid);
    push(mid, worst.b);
  }

  // The running sums drift; report compensated totals over the final partition.
  std::sort(heap.begin(), heap.end(),
            [](const detail::Panel& x, const detail::Panel& y) { return x.a < y.a; });
  CompensatedSum v;
  CompensatedSum e;
  for (const auto& panel : heap) {
    v += panel.value;
    e += panel.error;
  }
  out.value = v.value();
  out.error = e.value();
  return out;
}

}  // namespace hcwalk::quad
