#include "hcwalk/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcwalk/quadrature.hpp"

namespace hcwalk::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAsymptoticThreshold = 25.0;

// J_0(x), J_1(x) for x > 25 from the Hankel expansion. cos/sin of the phase
// are expanded around cos x, sin x so no rounded multiple of pi is subtracted
// from a large argument.
void j0_j1_asymptotic(double x, double& j0, double& j1) {
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double scale = std::sqrt(2.0 / (kPi * x));
  for (int nu = 0; nu <= 1; ++nu) {
    const double mu = 4.0 * nu * nu;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double previous = 1.0;
    for (int k = 1; k < 200; ++k) {
      term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
      if (std::abs(term) > std::abs(previous)) break;  // series turned divergent
      const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
      if (k % 2 == 0) {
        p += sign * term;
      } else {
        q += sign * term;
      }
      if (std::abs(term) < 1e-18) break;
      previous = term;
    }
    double cos_chi;
    double sin_chi;
    if (nu == 0) {  // chi = x - pi/4
      cos_chi = (c + s) * std::numbers::sqrt2 / 2.0;
      sin_chi = (s - c) * std::numbers::sqrt2 / 2.0;
    } else {  // chi = x - 3pi/4
      cos_chi = (s - c) * std::numbers::sqrt2 / 2.0;
      sin_chi = -(s + c) * std::numbers::sqrt2 / 2.0;
    }
    const double value = scale * (p * cos_chi - q * sin_chi);
    (nu == 0 ? j0 : j1) = value;
  }
}

double bessel_upward(int nu, double x) {
  double jm = 0.0;
  double j = 0.0;
  j0_j1_asymptotic(x, jm, j);
  if (nu == 0) return jm;
  for (int k = 1; k < nu; ++k) {
    const double next = (2.0 * k / x) * j - jm;
    jm = j;
    j = next;
  }
  return j;
}

double bessel_miller(int nu, double x) {
  const double m = std::max(static_cast<double>(nu), std::ceil(x));
  int start = static_cast<int>(m + 20.0 + std::ceil(14.0 * std::cbrt(m)));
  if (start % 2 != 0) ++start;

  double next = 0.0;  // J_{k+1}
  double cur = 1.0;   // J_k, arbitrary normalization
  double result = (nu == start) ? cur : 0.0;
  double norm = 2.0 * cur;  // start is even
  for (int k = start; k >= 1; --k) {
    const double prev = (2.0 * k / x) * cur - next;
    next = cur;
    cur = prev;
    const int order = k - 1;
    if (order == nu) result = cur;
    if (order == 0) {
      norm += cur;
    } else if (order % 2 == 0) {
      norm += 2.0 * cur;
    }
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      result *= 1e-250;
      norm *= 1e-250;
    }
  }
  return result / norm;
}

}  // namespace

double chebyshev_T(int t, double z) {
  if (t < 0) throw std::invalid_argument("Chebyshev degree must be >= 0");
  if (!(std::abs(z) <= 1.0 + 1e-15)) {
    throw std::domain_error("Chebyshev argument outside [-1, 1]: " + std::to_string(z));
  }
  z = std::clamp(z, -1.0, 1.0);
  if (t == 0) return 1.0;
  if (z == 1.0) return 1.0;
  if (z == -1.0) return t % 2 == 0 ? 1.0 : -1.0;
  return std::cos(t * std::acos(z));
}

double bessel_J(int nu, double x) {
  if (nu < 0 || nu > 500) throw std::domain_error("Bessel order outside [0, 500]: " + std::to_string(nu));
  if (!(x >= 0.0) || x > 1e6) throw std::domain_error("Bessel argument outside [0, 1e6]: " + std::to_string(x));
  if (x == 0.0) return nu == 0 ? 1.0 : 0.0;
  if (x < 1e-5) {
    const double half = 0.5 * x;
    const double lead = nu == 0 ? 1.0 : std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
    return lead * (1.0 - half * half / (nu + 1.0));
  }
  if (x > kAsymptoticThreshold && nu < x) return bessel_upward(nu, x);
  return bessel_miller(nu, x);
}

double hankel_coefficient(double nu, int k) {
  const double mu = 4.0 * nu * nu;
  double a = 1.0;
  for (int j = 1; j <= k; ++j) a *= (mu - (2.0 * j - 1.0) * (2.0 * j - 1.0)) / (8.0 * j);
  return a;
}

double hankel_remainder_bound(double nu, int terms, double abs_z) {
  if (terms < 1) throw std::invalid_argument("remainder needs at least one retained term");
  if (!(abs_z > 0.0)) throw std::domain_error("|z| must be positive");
  return 2.0 * std::abs(hankel_coefficient(nu, terms)) * std::pow(abs_z, -terms) *
         std::exp(std::abs(nu * nu - 0.25) / abs_z);
}

double hankel_rho_bound(double nu, cplx z) {
  const double r = (nu * nu - 0.25) / std::abs(z);
  return r * std::exp(r);
}

double hankel_modulus_general(double nu, cplx z) {
  if (!(z.real() > 0.0)) throw std::domain_error("Hankel modulus bound needs Re z > 0");
  return std::sqrt(2.0 / kPi) * (1.0 + hankel_rho_bound(nu, z)) * std::exp(-z.imag()) / std::sqrt(std::abs(z));
}

HankelEnvelope hankel_envelope(double nu, cplx z, int n) {
  if (!(z.real() > 0.0)) throw std::domain_error("Hankel envelope needs Re z > 0");
  if (!(nu < n)) throw std::domain_error("Hankel envelope needs nu < n");
  const double abs_z = std::abs(z);
  if (abs_z < static_cast<double>(n) * n) {
    throw std::domain_error("large-argument Hankel bound requires |z| >= n^2");
  }
  HankelEnvelope env;
  env.rho_bound = hankel_rho_bound(nu, z);
  env.modulus_bound = 3.0 * std::exp(-z.imag()) / std::sqrt(abs_z);
  const double c = z.real() / nu;
  if (c > 1.0 && nu > 0.0) {
    env.variation_bound = variation_bound(c);
    env.eta_bound = eta_bound(nu, c);
  } else {
    env.variation_bound = std::numeric_limits<double>::infinity();
    env.eta_bound = std::numeric_limits<double>::infinity();
  }
  return env;
}

cplx xi(cplx z) {
  if (z.real() > 0.0) {
    const cplx root = std::sqrt(1.0 + z * z);
    return root + std::log(z / (1.0 + root));
  }
  if (z.real() == 0.0 && z.imag() < -1.0) {
    // Limit from Re z > 0: arg(1 + z^2) -> -pi, so sqrt(1 - w^2) = -i sqrt(w^2 - 1).
    const double w = -z.imag();
    const cplx root(0.0, -std::sqrt(w * w - 1.0));
    return root + std::log(z / (1.0 + root));
  }
  throw std::domain_error("xi(z) is defined here for Re z > 0 or z = -iw with w > 1");
}

cplx g_function(cplx z) {
  if (!(z.real() >= 1.0) || !(z.imag() >= 0.0)) {
    throw std::domain_error("g(z) is defined on Re z >= 1, Im z >= 0");
  }
  return z - std::sqrt(z * z - 1.0) + std::acos(1.0 / z);
}

double cubic_root_t0() {
  const double r = 3.0 * std::sqrt(69.0) / 2.0;
  return (std::cbrt(12.5 - r) + std::cbrt(12.5 + r) - 1.0) / 3.0;
}

GRayMaximum g_ray_maximum() {
  // d/dy Im g(1 + iy) = Re g'(1 + iy) with g'(z) = 1 - sqrt(z^2 - 1)/z; it
  // changes sign exactly once on (0, inf).
  auto slope = [](double y) {
    const cplx z(1.0, y);
    return (1.0 - std::sqrt(z * z - 1.0) / z).real();
  };
  double lo = 0.1;
  double hi = 3.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  GRayMaximum out;
  out.y_numeric = 0.5 * (lo + hi);
  out.y_closed_form = std::sqrt(cubic_root_t0());
  out.value = g_function(cplx(1.0, out.y_numeric));
  return out;
}

double u1(double p) { return (3.0 * p - 5.0 * p * p * p) / 24.0; }

double variation_bound(double c) {
  if (!(c > 1.0)) throw std::domain_error("variation bound needs c > 1");
  const double c2 = c * c;
  return 1.0 / 12.0 + 1.0 / (6.0 * std::sqrt(5.0)) + std::pow(4.0 / 27.0, 0.25) +
         c2 * (c2 + 2.0) / (std::sqrt(8.0) * std::pow(c2 - 1.0, 2.5));
}

double eta_bound(double nu, double c) {
  if (!(nu > 0.0)) throw std::domain_error("eta bound needs nu > 0");
  const double ratio = 2.0 * variation_bound(c) / nu;
  return std::exp(ratio) * ratio;
}

BetaIntegrals beta_half_integrals(double a) {
  if (!(a > 0.0)) throw std::domain_error("beta integrals need a > 0");
  const double b_quarter = std::tgamma(0.5) * std::tgamma(0.25) / std::tgamma(0.75);
  const double b_three_quarter = std::tgamma(0.5) * std::tgamma(0.75) / std::tgamma(1.25);
  return {b_quarter / (2.0 * std::sqrt(a)), b_three_quarter / (2.0 * std::pow(a, 1.5))};
}

BetaIntegrals beta_half_integrals_quadrature(double a) {
  if (!(a > 0.0)) throw std::domain_error("beta integrals need a > 0");
  std::vector<double> breaks;
  for (double s = 1.0; s < 100.0; s += 1.0) breaks.push_back(s);
  const quad::Tolerance tol{1e-17, 1e-14, 4000};
  const auto first = quad::integrate([](double s) { return 1.0 / std::sqrt(std::cosh(s)); }, 0.0, 100.0, tol, breaks);
  const auto second = quad::integrate([](double s) { return std::pow(std::cosh(s), -1.5); }, 0.0, 100.0, tol, breaks);
  return {first.value / std::sqrt(a), second.value / std::pow(a, 1.5)};
}

bool cos_gaussian_bound_check(std::span<const double> grid) {
  for (double t : grid) {
    if (!(t >= 0.0 && t < kPi / 2.0)) throw std::domain_error("grid point outside [0, pi/2)");
    if (std::cos(t) > std::exp(-0.5 * t * t)) return false;
  }
  return true;
}

namespace {

struct ComplexIntegral {
  cplx value;
  double error = 0.0;
};

// int_X^inf x^{-s} e^{i omega x} dx for omega >= 0, s > 1.
ComplexIntegral oscillatory_power_tail(double omega, double s, double cutoff) {
  if (omega == 0.0) return {cplx(std::pow(cutoff, 1.0 - s) / (s - 1.0), 0.0), 0.0};
  // Rotate u = omega x onto the ray Y + iy: int_Y^inf u^{-s} e^{iu} du
  //   = i e^{iY} int_0^inf (Y + iy)^{-s} e^{-y} dy.
  const double y0 = omega * cutoff;
  std::vector<double> breaks;
  for (double b = y0 / 8.0; b < 80.0; b *= 2.0) breaks.push_back(b);
  for (double b = 1.0; b < 80.0; b += 1.0) breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  const double scale = std::pow(y0, -s);
  const quad::Tolerance tol{1e-16 * scale, 1e-14, 4000};
  auto re = quad::integrate([&](double y) { return (std::pow(cplx(y0, y), -s) * std::exp(-y)).real(); }, 0.0, 80.0, tol, breaks);
  auto im = quad::integrate([&](double y) { return (std::pow(cplx(y0, y), -s) * std::exp(-y)).imag(); }, 0.0, 80.0, tol, breaks);
  const cplx inner(re.value, im.value);
  const double factor = std::pow(omega, s - 1.0);
  const cplx value = factor * cplx(0.0, 1.0) * std::exp(cplx(0.0, y0)) * inner;
  return {value, factor * (re.error + im.error)};
}

}  // namespace

BesselCosineTransform chebyshev_via_bessel(int t, double z, double cutoff, int terms) {
  if (t < 2 || t % 2 != 0) throw std::invalid_argument("Bessel-cosine identity needs an even degree t >= 2");
  if (!(std::abs(z) <= 1.0)) throw std::domain_error("Bessel-cosine identity needs |z| <= 1");
  if (terms < 1) throw std::invalid_argument("need at least one expansion term");
  if (cutoff <= 0.0) cutoff = std::max(200.0, 4.0 * t * t);

  std::vector<double> breaks;
  for (double b = kPi / 2.0; b < cutoff; b += kPi / 2.0) breaks.push_back(b);
  const auto head = quad::integrate(
      [&](double x) { return bessel_J(t, x) * std::cos(x * z) / x; }, 0.0, cutoff,
      quad::Tolerance{1e-15, 1e-13, 20000}, breaks);

  // Beyond the cutoff: x^{-1} J_t(x) cos(xz) = sqrt(2/pi) sum_k a_k Re[i^k e^{i(x - phi)}] x^{-3/2-k} cos(xz) + R.
  const double phi = t * kPi / 2.0 + kPi / 4.0;
  const cplx rotation = std::exp(cplx(0.0, -phi));
  double tail = 0.0;
  double tail_error = 0.0;
  cplx ik(1.0, 0.0);
  for (int k = 0; k < terms; ++k) {
    const double a = hankel_coefficient(t, k);
    const double s = 1.5 + k;
    const auto plus = oscillatory_power_tail(1.0 + z, s, cutoff);
    const auto minus = oscillatory_power_tail(1.0 - z, s, cutoff);
    const double weight = std::sqrt(2.0 / kPi) * a * 0.5;
    tail += weight * (ik * rotation * (plus.value + minus.value)).real();
    tail_error += std::abs(weight) * (plus.error + minus.error);
    ik *= cplx(0.0, 1.0);
  }
  const double remainder = std::sqrt(2.0 / kPi) * hankel_remainder_bound(t, terms, cutoff) *
                           std::pow(cutoff, -0.5) / (terms + 0.5);

  const double sign = (t / 2) % 2 == 0 ? 1.0 : -1.0;
  BesselCosineTransform out;
  out.cutoff = cutoff;
  out.truncated = sign * t * head.value;
  out.value = sign * t * (head.value + tail);
  out.certificate = t * (remainder + head.error + tail_error);
  return out;
}

}  // namespace hcwalk::specfun
