#include "hcwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hcwalk/quadrature.hpp"
#include "hcwalk/specfun.hpp"
#include "hcwalk/summation.hpp"

namespace hcwalk::spectral {

namespace {

constexpr double kPi = std::numbers::pi;
// int_0^inf (a^2+y^2)^{-3/4} dy = kBetaQuarter / sqrt(a), and the 5/4 analogue.
const double kBetaQuarter = std::tgamma(0.5) * std::tgamma(0.25) / std::tgamma(0.75) / 2.0;
const double kBetaThreeQuarter = std::tgamma(0.5) * std::tgamma(0.75) / std::tgamma(1.25) / 2.0;

std::vector<double> halved_binomial_row(int n) {
  std::vector<double> row{1.0};
  row.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j < n; ++j) {
    row.push_back(0.0);
    for (std::size_t m = row.size() - 1; m > 0; --m) row[m] = 0.5 * (row[m] + row[m - 1]);
    row[0] *= 0.5;
  }
  return row;
}

double pairwise_sum(const std::vector<double>& terms, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 2) {
    CompensatedSum s;
    for (std::size_t i = lo; i < hi; ++i) s += terms[i];
    return s.value();
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  CompensatedSum s;
  s += pairwise_sum(terms, lo, mid);
  s += pairwise_sum(terms, mid, hi);
  return s.value();
}

void require_walk_args(int n, int nu) {
  if (n < 2) throw std::invalid_argument("segment integrals need n >= 2");
  if (nu < 1) throw std::invalid_argument("segment integrals need nu >= 1");
}

SegmentIntegral integrate_segment(int n, int nu, int k, double lo, double hi) {
  auto f = [n, nu](double x) {
    if (x == 0.0) return 0.0;
    return specfun::bessel_J(nu, x) / x * std::pow(std::cos(x / n), n);
  };
  std::vector<double> breaks;
  const int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / kPi)));
  for (int i = 1; i < pieces; ++i) breaks.push_back(lo + (hi - lo) * i / pieces);
  if (nu > lo && nu < hi) {
    breaks.push_back(nu);
    std::sort(breaks.begin(), breaks.end());
  }
  const quad::Tolerance tol{1e-17, 1e-11, 200000};
  const auto r = quad::integrate(f, lo, hi, tol, breaks);
  if (r.error > std::max(1e-14, 1e-6 * std::abs(r.value))) {
    throw quadrature_error("segment integral I_" + std::to_string(k) + " did not converge", r.error);
  }
  return {k, r.value, r.error};
}

}  // namespace

double p0_amplitude_chebyshev(int n, int t, SummationOrder order) {
  if (n < 1) throw std::invalid_argument("hypercube dimension must be >= 1");
  if (t < 0) throw std::invalid_argument("step must be >= 0");
  const auto weights = halved_binomial_row(n);
  std::vector<double> terms(weights.size());
  for (int m = 0; m <= n; ++m) {
    // 1 - 2m/n = cos(theta) with theta = 2 asin(sqrt(m/n)), accurate near both ends.
    const double theta = 2.0 * std::asin(std::sqrt(static_cast<double>(m) / n));
    terms[static_cast<std::size_t>(m)] = weights[static_cast<std::size_t>(m)] * std::cos(t * theta);
  }
  switch (order) {
    case SummationOrder::ascending: {
      CompensatedSum s;
      for (double v : terms) s += v;
      return s.value();
    }
    case SummationOrder::descending: {
      CompensatedSum s;
      for (auto it = terms.rbegin(); it != terms.rend(); ++it) s += *it;
      return s.value();
    }
    case SummationOrder::pairwise:
      return pairwise_sum(terms, 0, terms.size());
  }
  return 0.0;
}

double grid_point(int k) { return (k - 0.5) * kPi; }

SegmentIntegral segment_integral(int n, int nu, int k) {
  require_walk_args(n, nu);
  if (k < 1) throw std::invalid_argument("segment index must be >= 1");
  return integrate_segment(n, nu, k, n * grid_point(k), n * grid_point(k + 1));
}

SegmentIntegral bulk_integral(int n, int nu) {
  require_walk_args(n, nu);
  return integrate_segment(n, nu, 0, 0.0, n * grid_point(1));
}

double tail_certificate(int n, int nu, int first_k) {
  require_walk_args(n, nu);
  if (first_k < 1) throw std::invalid_argument("tail must start at k >= 1");
  const double s = std::max(0.0, nu * nu - 0.25);
  const double scale = std::exp2(-n);
  const double x_first = n * grid_point(first_k);
  const double r = s / x_first;

  // Per-segment bound summed with sum_{k >= K} (k - 1/2)^{-3/2} <= (K - 1/2)^{-3/2} + 2 (K - 1/2)^{-1/2}.
  const double kk = first_k - 0.5;
  const double zeta_tail = std::pow(kk, -1.5) + 2.0 / std::sqrt(kk);
  const double chain = scale * (1.5 * kPi * n + 2.0 * s * std::exp(r)) * kBetaThreeQuarter *
                       std::pow(n * kPi, -1.5) * zeta_tail;

  const double ray = scale * std::sqrt(2.0 / kPi) * (1.0 + r * std::exp(r)) * kBetaQuarter / std::sqrt(x_first);
  return std::min(chain, ray);
}

BesselAmplitude p0_amplitude_bessel(int n, int t, int k_max) {
  if (t < 2 || t % 2 != 0) throw std::invalid_argument("Bessel route needs an even step t >= 2");
  if (k_max <= 0) k_max = std::max(n, 40);
  if (k_max < n) throw std::invalid_argument("k_max must be >= n");
  require_walk_args(n, t);

  CompensatedSum sum;
  double error = 0.0;
  const auto bulk = bulk_integral(n, t);
  sum += bulk.value;
  error += bulk.quad_error;
  for (int k = 1; k < k_max; ++k) {
    const auto seg = segment_integral(n, t, k);
    sum += seg.value;
    error += seg.quad_error;
  }
  const double sign = (t / 2) % 2 == 0 ? 1.0 : -1.0;
  BesselAmplitude out;
  out.amplitude = sign * t * sum.value();
  out.tail_bound = t * tail_certificate(n, t, k_max);
  out.quad_error = t * error;
  out.k_max = k_max;
  return out;
}

}  // namespace hcwalk::spectral
