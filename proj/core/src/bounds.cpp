#include "hcwalk/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "hcwalk/spectral.hpp"
#include "hcwalk/specfun.hpp"
#include "hcwalk/summation.hpp"
#include "hcwalk/walk.hpp"

namespace hcwalk::bounds {

namespace {

namespace mp = boost::multiprecision;
using big_float = mp::cpp_bin_float_50;
using specfun::cplx;

constexpr double kPi = std::numbers::pi;
constexpr double kRoundingAllowance = 1e-12;

big_float log_factorial(int n) {
  mp::cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return mp::log(big_float(f));
}

big_float log_binomial(int n, int k) {
  mp::cpp_int c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return mp::log(big_float(c));
}

// 2^-n (1 - e^{-2y/n})^n: |cos^n| on the ray n a_k + iy times e^{-y}.
double ray_weight(int n, double y) { return std::exp2(-n) * std::pow(-std::expm1(-2.0 * y / n), n); }

BoundReport upper(std::string name, double computed, double bound) {
  return make_report(std::move(name), 0, 0, computed, bound);
}

}  // namespace

BoundReport make_report(std::string name, int n, int nu, double computed, double bound) {
  BoundReport r;
  r.name = std::move(name);
  r.n = n;
  r.nu = nu;
  r.computed = computed;
  r.bound = bound;
  r.margin = bound - computed;
  r.pass = r.margin >= 0.0;
  return r;
}

bool all_pass(const std::vector<BoundReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.pass; });
}

double tail_bound(int n) { return 100.0 * std::sqrt(n) / std::exp2(n); }

double middle_bound(int n) { return 4000.0 * std::sqrt(n) / std::pow(1.541, n); }

double bulk_bound(int n, double alpha) { return 3.0 / std::pow(1.0 + alpha, 0.5 * alpha * n); }

bool theorem2_admissible(int n, int nu, double alpha) {
  return n >= 2 && alpha > kPi / 6.0 && alpha < 1.0 && n * alpha >= 1.0 && nu > n * alpha && nu < n;
}

std::array<BoundReport, 3> theorem2_bounds(int n, int nu, double alpha, int tail_segments) {
  if (!theorem2_admissible(n, nu, alpha)) {
    throw std::invalid_argument("(n, nu, alpha) = (" + std::to_string(n) + ", " + std::to_string(nu) + ", " +
                                std::to_string(alpha) + ") outside the admissible range");
  }
  if (tail_segments < 1) throw std::invalid_argument("need at least one tail segment");

  CompensatedSum tail;
  double tail_err = 0.0;
  for (int k = n; k < n + tail_segments; ++k) {
    const auto seg = spectral::segment_integral(n, nu, k);
    tail += seg.value;
    tail_err += seg.quad_error;
  }
  const double certificate = spectral::tail_certificate(n, nu, n + tail_segments);

  CompensatedSum middle;
  double middle_err = 0.0;
  for (int k = 1; k < n; ++k) {
    const auto seg = spectral::segment_integral(n, nu, k);
    middle += seg.value;
    middle_err += seg.quad_error;
  }
  const auto bulk = spectral::bulk_integral(n, nu);

  return {make_report("tail", n, nu, std::abs(tail.value()) + tail_err + certificate, tail_bound(n)),
          make_report("middle", n, nu, std::abs(middle.value()) + middle_err, middle_bound(n)),
          make_report("bulk", n, nu, std::abs(bulk.value) + bulk.quad_error, bulk_bound(n, alpha))};
}

BoundReport middle_ray_envelope(int n, int nu, int k, double y) {
  if (k < 1 || k >= n) throw std::invalid_argument("middle rays need 1 <= k < n");
  if (nu >= n) throw std::invalid_argument("ray envelope needs nu < n");
  if (!(y >= 0.0)) throw std::invalid_argument("y must be >= 0");
  const cplx z(n * spectral::grid_point(k), y);
  const double abs_z = std::abs(z);
  // |H(z)| e^{Im z} |z|^{1/2}: the constant 3 once |z| >= n^2, the general
  // large-argument bound below that.
  const double modulus = abs_z >= static_cast<double>(n) * n
                             ? specfun::hankel_envelope(nu, cplx(abs_z, 0.0), n).modulus_bound * std::sqrt(abs_z)
                             : std::sqrt(2.0 / kPi) * (1.0 + specfun::hankel_rho_bound(nu, z));
  const double computed = ray_weight(n, y) * modulus * std::pow(abs_z, -1.5);
  const double bound = 860.0 * std::pow(1.541, -n) * std::pow(abs_z, -1.5);
  return make_report("middle_ray_envelope", n, nu, computed, bound);
}

BoundReport tail_ray_difference(int n, int nu, int k, double y) {
  if (n < 2 || k < n) throw std::invalid_argument("tail rays need k >= n >= 2");
  if (nu >= n) throw std::invalid_argument("ray difference needs nu < n");
  if (!(y >= 0.0)) throw std::invalid_argument("y must be >= 0");
  // On these rays the phase factors of both points coincide, so
  // f(z) = 2^-n (1 - e^{-2y/n})^n e^{-i(nu pi/2 + pi/4)} sqrt(2/pi) z^{-3/2} (1 + rho(z)).
  const cplx z(n * spectral::grid_point(k), y);
  const cplx z_next = z + n * kPi;
  const double leading = std::abs(std::pow(z, -1.5) - std::pow(z_next, -1.5));
  const double corrections = specfun::hankel_rho_bound(nu, z) * std::pow(std::abs(z), -1.5) +
                             specfun::hankel_rho_bound(nu, z_next) * std::pow(std::abs(z_next), -1.5);
  const double computed = ray_weight(n, y) * std::sqrt(2.0 / kPi) * (leading + corrections);
  const double bound = 15.0 * n * n * std::exp2(-n) * std::pow(std::abs(z), -2.5);
  return make_report("tail_ray_difference", n, nu, computed, bound);
}

double lemma1_amplification(int n, int w, double p0) {
  if (n < 1 || w < 0 || 2 * w >= n) throw std::invalid_argument("amplification needs 0 <= w < n/2");
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("p0 must be a probability");
  if (w == 0) return p0;
  return std::exp(w * std::log(static_cast<double>(n)) - std::lgamma(w + 1.0)) * p0;
}

std::vector<BoundReport> lemma1_empirical(int n, int t_max, int w_limit) {
  if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
  w_limit = std::min(w_limit, (n + 1) / 2);
  const auto states = trajectory(n, t_max + w_limit);
  std::vector<BoundReport> out;
  for (int t = 0; t <= t_max; ++t) {
    for (int w = 0; w < w_limit && 2 * w < n; ++w) {
      double p0 = 0.0;
      for (int s = std::max(0, t - w); s <= t + w; ++s) p0 = std::max(p0, level_probability(states[static_cast<std::size_t>(s)], 0));
      out.push_back(make_report("amplification_w" + std::to_string(w), n, t,
                                level_probability(states[static_cast<std::size_t>(t)], w),
                                lemma1_amplification(n, w, p0)));
    }
  }
  return out;
}

std::vector<BoundReport> lemma1_proof_inequalities(int n, int t_max) {
  if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
  const auto states = trajectory(n, t_max + 1);
  std::vector<BoundReport> out;
  for (int t = 0; t <= t_max; ++t) {
    const auto& now = states[static_cast<std::size_t>(t)];
    const auto& next = states[static_cast<std::size_t>(t) + 1];
    for (int w = 1; 2 * w < n; ++w) {
      const double r = now.right(w);
      const double l = now.left(w);
      const double up = next.right(w - 1);
      const double bound = std::max(l * l, up * up) * (1.0 + kRoundingAllowance);
      out.push_back(make_report("chain_w" + std::to_string(w), n, t, static_cast<double>(w) / (n - w) * r * r, bound));
    }
    if (t == 0) continue;
    const auto& prev = states[static_cast<std::size_t>(t) - 1];
    for (int w = 1; w <= n; ++w) {
      const double l = now.left(w);
      out.push_back(make_report("step_w" + std::to_string(w), n, t, l * l,
                                level_probability(prev, w - 1) * (1.0 + kRoundingAllowance)));
    }
  }
  return out;
}

std::array<BoundReport, 2> theorem1_check(int n, const BoundParams& params, double c_empirical) {
  if (n < 2) throw std::invalid_argument("theorem1_check needs n >= 2");
  const int t = static_cast<int>(std::floor(params.t_coeff * n));
  const auto profile = scan({n, std::max(t, 2 * n)});
  const double at_t = profile[static_cast<std::size_t>(t)].max_vertex_prob;
  const auto best = t_min(std::span(profile).first(static_cast<std::size_t>(2 * n) + 1));
  return {make_report("theorem1", n, t, at_t, c_empirical / std::pow(params.rate, n)),
          make_report("envelope", n, best.t, best.probability, 5.0 / std::pow(1.93, n))};
}

double calibrate_theorem1_constant(int n, const BoundParams& params) {
  const int t = static_cast<int>(std::floor(params.t_coeff * n));
  const auto profile = scan({n, t});
  const double p = profile.back().max_vertex_prob;
  const double scale = std::pow(params.rate, n);
  double c = p * scale;
  while (c / scale < p) c = std::nextafter(c, INFINITY);
  return c;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("entropy needs p in [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double entropy_binomial_bound(int n, int w) {
  if (n < 0 || w < 0 || w > n) throw std::invalid_argument("entropy bound needs 0 <= w <= n");
  return (n + 1.0) * std::exp2(-n * binary_entropy(static_cast<double>(w) / n));
}

BoundReport entropy_binomial_report(int n, int w) {
  if (n < 1 || w < 0 || w > n) throw std::invalid_argument("entropy bound needs 0 <= w <= n");
  const big_float p = big_float(w) / n;
  big_float h = 0;
  if (w > 0 && w < n) h = -(p * mp::log(p) + (1 - p) * mp::log(1 - p)) / mp::log(big_float(2));
  const big_float log_bound = mp::log(big_float(n + 1)) - n * h * mp::log(big_float(2));
  const big_float log_inverse = -log_binomial(n, w);
  return make_report("entropy_binomial", n, w, static_cast<double>(mp::exp(log_inverse)),
                     static_cast<double>(mp::exp(log_bound)));
}

double equilibrium_case1(double c) {
  return std::exp(c) * std::pow(1.0 - c, 1.0 - c) / std::pow(2.0 - 2.0 * c, 1.0 - 2.0 * c);
}

double equilibrium_case2(double c) { return std::pow(c, c) * std::pow(1.0 - c, 1.0 - c); }

double equilibrium_c() {
  // log(case1) - log(case2) = c - (1-2c) ln(2-2c) - c ln c.
  auto h = [](double c) { return c - (1.0 - 2.0 * c) * std::log(2.0 - 2.0 * c) - c * std::log(c); };
  double lo = 0.05;
  double hi = 0.3;
  const bool lo_sign = h(lo) > 0.0;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if ((h(mid) > 0.0) == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<BoundReport> stirling_bounds_check(int n, double c) {
  if (n < 2) throw std::invalid_argument("factorial chain needs n >= 2");
  if (!(c >= 0.0 && c < 1.0)) throw std::invalid_argument("factorial chain needs 0 <= c < 1");
  const int w = static_cast<int>(std::floor(c * n));
  const int m = n - w;
  const big_float two_pi = 2 * boost::math::constants::pi<big_float>();
  const big_float log_n_fact = log_factorial(n);
  const big_float log_m_fact = log_factorial(m);

  const big_float lower = n * (mp::log(big_float(n)) - 1) + big_float(1) / (12 * n + 1) + mp::log(two_pi * n) / 2;
  const big_float upper_m = m * (mp::log(big_float(m)) - 1) + big_float(1) / (12 * big_float(m)) + mp::log(two_pi * m) / 2;
  const big_float chain = mp::log(big_float(2)) - n * mp::log(big_float("0.99068")) - w * mp::log(big_float(n));

  return {make_report("robbins_lower", n, w, static_cast<double>(lower), static_cast<double>(log_n_fact)),
          make_report("robbins_upper", n, w, static_cast<double>(log_m_fact), static_cast<double>(upper_m)),
          make_report("factorial_ratio", n, w, static_cast<double>(log_m_fact - log_n_fact), static_cast<double>(chain))};
}

std::vector<BoundReport> appendix_reports() {
  std::vector<BoundReport> out;

  const auto closed = specfun::beta_half_integrals(1.0);
  const auto quad = specfun::beta_half_integrals_quadrature(1.0);
  out.push_back(upper("beta_quarter_quadrature", std::abs(quad.three_quarter / closed.three_quarter - 1.0), 1e-10));
  out.push_back(upper("beta_three_quarter_quadrature", std::abs(quad.five_quarter / closed.five_quarter - 1.0), 1e-10));
  out.push_back(upper("beta_three_quarter_below_2", closed.five_quarter, 2.0));

  const auto ray = specfun::g_ray_maximum();
  out.push_back(upper("im_g_ray_max", ray.value.imag(), 0.2607));
  out.push_back(upper("g_ray_argmax_cubic", std::abs(ray.y_numeric - ray.y_closed_form), 1e-9));
  double im_max = 0.0;
  for (int i = 0; i <= 400; ++i) {
    for (int j = 0; j <= 400; ++j) {
      const double re = 1.0 + 0.01 * i + 0.0001 * i * i;
      const double im = 0.01 * j + 0.0001 * j * j;
      im_max = std::max(im_max, specfun::g_function(cplx(re, im)).imag());
    }
  }
  out.push_back(upper("im_g_quarter_plane", im_max, 0.2607));
  out.push_back(upper("middle_rate", std::exp(0.2607) / 2.0, 1.0 / 1.541));

  std::vector<double> grid;
  constexpr int kGrid = 100000;
  for (int i = 0; i < kGrid; ++i) grid.push_back(0.5 * kPi * i / kGrid);
  double cos_gap = -INFINITY;
  for (double t : grid) cos_gap = std::max(cos_gap, std::cos(t) - std::exp(-0.5 * t * t));
  out.push_back(upper("cos_gaussian", specfun::cos_gaussian_bound_check(grid) ? cos_gap : 1.0, 0.0));

  out.push_back(upper("variation_at_half_pi", specfun::variation_bound(kPi / 2.0), 2.273));
  double rise = -INFINITY;
  double prev = specfun::variation_bound(1.001);
  for (int i = 1; i <= 10000; ++i) {
    const double v = specfun::variation_bound(1.001 + i * (99.0 / 10000.0));
    rise = std::max(rise, v - prev);
    prev = v;
  }
  out.push_back(upper("variation_decreasing", rise, 0.0));
  out.push_back(upper("eta_constant", 1.0 + 2.0 * 2.273 * std::exp(2.0 * 2.273), 430.0));

  const double c = 0.13368;
  out.push_back(upper("entropy_rate", 1.4818, std::exp2(binary_entropy(c))));
  out.push_back(upper("factorial_rate", std::exp(c) * std::pow(1.0 - c, 1.0 - c), 1.0 / 0.99068));
  out.push_back(upper("robbins_exponent", std::exp(1.0 / (12.0 * (1.0 - c))), 2.0));
  out.push_back(upper("bulk_rate", 1.22302, std::pow(1.7326, 0.5 * 0.7326)));
  out.push_back(upper("combined_rate", 1.4818, 1.22302 * 1.22302 * 0.99068));
  out.push_back(upper("alpha_above_pi_over_6", kPi / 6.0, 0.7326));

  const double c_eq = equilibrium_c();
  out.push_back(upper("equilibrium_balance", std::abs(equilibrium_case1(c_eq) - equilibrium_case2(c_eq)), 1e-8));

  out.push_back(upper("zeta_three_halves", 30.0 * boost::math::zeta(1.5), 100.0));
  const double beta_quarter = closed.three_quarter;  // B(1/2,1/4)/2
  out.push_back(upper("middle_ray_constant", 860.0 * 2.0 * beta_quarter / std::sqrt(2.0 * kPi), 1800.0));
  out.push_back(upper("far_ray_constant", 9.0 * std::sqrt(2.0) / std::sqrt(kPi), 8.0));
  out.push_back(upper("bessel_diagonal_constant",
                      std::cbrt(2.0) / (std::pow(3.0, 2.0 / 3.0) * std::tgamma(2.0 / 3.0)), 0.45));
  out.push_back(upper("gamma_constant", 0.45 * std::sqrt(kPi) * std::exp(1.0 / 6.0), 1.0));
  return out;
}

std::vector<BoundReport> bessel_diagonal_reports(int nu_max) {
  std::vector<BoundReport> out;
  for (int nu = 1; nu <= nu_max; ++nu) {
    out.push_back(make_report("bessel_diagonal", 0, nu, specfun::bessel_J(nu, nu), 0.45 / std::cbrt(nu)));
  }
  return out;
}

std::vector<BoundReport> bessel_scaling_reports(int nu_max, int grid) {
  std::vector<BoundReport> out;
  for (int nu = 1; nu <= nu_max; ++nu) {
    const double diagonal = specfun::bessel_J(nu, nu);
    double worst = 0.0;
    for (int i = 1; i <= grid; ++i) {
      const double t = static_cast<double>(i) / grid;
      const double rhs = diagonal * std::exp(nu * std::log(t) + 0.5 * nu * (1.0 - t * t));
      if (rhs > 0.0) worst = std::max(worst, std::abs(specfun::bessel_J(nu, nu * t)) / rhs);
    }
    out.push_back(make_report("bessel_scaling", 0, nu, worst, 1.0));
  }
  return out;
}

}  // namespace hcwalk::bounds
