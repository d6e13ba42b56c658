#pragma once

#include <complex>
#include <span>

namespace hcwalk::specfun {

using cplx = std::complex<double>;

/// T_t(z) for |z| <= 1 (inputs up to 1e-15 outside are clamped).
double chebyshev_T(int t, double z);

/// J_nu(x) for integer 0 <= nu <= 500 and 0 <= x <= 1e6.
///
/// For x > 25 and nu < x, J_0 and J_1 come from the Hankel asymptotic
/// expansion and are carried upward by the three-term recurrence. Otherwise
/// Miller's backward recurrence is normalized with J_0 + 2 sum J_2k = 1.
double bessel_J(int nu, double x);

/// a_k(nu) of the Hankel large-argument expansion.
double hankel_coefficient(double nu, int k);

/// DLMF bound on the remainder after `terms` terms of the large-argument
/// expansion of H^(1)_nu(z) for 0 <= arg z <= pi/2:
///   2 |a_terms(nu)| |z|^-terms exp(|nu^2 - 1/4| / |z|).
double hankel_remainder_bound(double nu, int terms, double abs_z);

/// |rho(nu,z)| <= (nu^2 - 1/4)|z|^-1 exp((nu^2 - 1/4)|z|^-1).
double hankel_rho_bound(double nu, cplx z);

/// |H^(1)_nu(z)| <= sqrt(2/pi) (1 + rho_bound) e^{-Im z} |z|^{-1/2}, any Re z > 0.
double hankel_modulus_general(double nu, cplx z);

struct HankelEnvelope {
  double modulus_bound = 0.0;    // 3 e^{-Im z} / |z|^{1/2}
  double rho_bound = 0.0;
  double eta_bound = 0.0;        // |eta(nu, -i z/nu)|, infinite when Re z <= nu
  double variation_bound = 0.0;  // V_{+inf,-iw} with w = z/nu, infinite when Re z <= nu
};

/// Envelope used in the large-argument regime. Requires nu < n,
/// |z| >= n^2 and Re z > 0; throws std::domain_error otherwise.
HankelEnvelope hankel_envelope(double nu, cplx z, int n);

/// xi(z) = (1+z^2)^{1/2} + ln(z / (1 + (1+z^2)^{1/2})) for Re z > 0, plus the
/// limit from the right half-plane on the ray z = -iw, w > 1.
cplx xi(cplx z);

/// g(z) = z - sqrt(z^2 - 1) + arccos(1/z) on Re z >= 1, Im z >= 0.
cplx g_function(cplx z);

/// Real root of t^3 + t^2 = 1 (Cardano).
double cubic_root_t0();

struct GRayMaximum {
  double y_closed_form = 0.0;  // sqrt(t0)
  double y_numeric = 0.0;      // numeric argmax of Im g(1 + iy)
  cplx value;                  // g(1 + i y_numeric)
};

GRayMaximum g_ray_maximum();

/// U_1(p) = (3p - 5p^3) / 24.
double u1(double p);

/// 1/12 + 1/(6 sqrt 5) + (4/27)^{1/4} + c^2 (c^2 + 2) / (sqrt 8 (c^2 - 1)^{5/2}), c > 1.
double variation_bound(double c);

/// exp(2V/nu) 2V/nu with V = variation_bound(c).
double eta_bound(double nu, double c);

struct BetaIntegrals {
  double three_quarter = 0.0;  // int_0^inf (a^2 + y^2)^{-3/4} dy
  double five_quarter = 0.0;   // int_0^inf (a^2 + y^2)^{-5/4} dy
};

/// Closed form B(1/2,1/4) / (2 sqrt a) and B(1/2,3/4) / (2 a^{3/2}).
BetaIntegrals beta_half_integrals(double a);

/// The same integrals by quadrature after y = a sinh s.
BetaIntegrals beta_half_integrals_quadrature(double a);

/// True iff cos t <= exp(-t^2/2) at every grid point; grid must lie in [0, pi/2).
bool cos_gaussian_bound_check(std::span<const double> grid);

/// (-1)^{t/2} t int_0^inf x^{-1} J_t(x) cos(xz) dx, which equals T_t(z).
///
/// [0, X] is integrated numerically. Beyond X the Bessel function is replaced
/// by `terms` terms of its large-argument expansion; those oscillatory tail
/// integrals are evaluated exactly after rotating onto a vertical ray, and the
/// expansion remainder is bounded with hankel_remainder_bound.
struct BesselCosineTransform {
  double value = 0.0;        // truncated + tail, scaled by (-1)^{t/2} t
  double truncated = 0.0;    // [0, X] part only, same scaling
  double certificate = 0.0;  // rigorous bound on |value - T_t(z)| up to quadrature error estimates
  double cutoff = 0.0;       // X
};

BesselCosineTransform chebyshev_via_bessel(int t, double z, double cutoff = 0.0, int terms = 6);

}  // namespace hcwalk::specfun
