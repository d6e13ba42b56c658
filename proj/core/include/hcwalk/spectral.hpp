#pragma once

#include <stdexcept>
#include <string>

namespace hcwalk::spectral {

enum class SummationOrder { ascending, descending, pairwise };

/// <psi_start| U^t |psi_start> = 2^-n sum_m C(n,m) T_t(1 - 2m/n).
///
/// The square is P[0,t]. Weights 2^-n C(n,m) come from repeatedly averaging
/// a Pascal row, so nothing overflows for any n.
double p0_amplitude_chebyshev(int n, int t, SummationOrder order = SummationOrder::ascending);

/// a_k = (k - 1/2) pi; n a_k are the zeros of cos^n(x/n).
double grid_point(int k);

struct SegmentIntegral {
  int k = 0;
  double value = 0.0;
  double quad_error = 0.0;
};

class quadrature_error : public std::runtime_error {
 public:
  quadrature_error(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  [[nodiscard]] double achieved() const { return achieved_; }

 private:
  double achieved_;
};

/// I_k(n,nu) = int_{n a_k}^{n a_{k+1}} x^-1 J_nu(x) cos^n(x/n) dx, k >= 1.
SegmentIntegral segment_integral(int n, int nu, int k);

/// I_0(n,nu) = int_0^{n a_1} x^-1 J_nu(x) cos^n(x/n) dx, split at x = nu.
SegmentIntegral bulk_integral(int n, int nu);

/// Rigorous bound on |sum_{k >= K} I_k(n,nu)|, K >= 1.
///
/// Minimum of two estimates built from the Hankel modulus bound on the
/// vertical rays Re x = n a_k: the sum of per-segment bounds, and a single
/// ray at n a_K which bounds the whole tail at once.
double tail_certificate(int n, int nu, int first_k);

struct BesselAmplitude {
  double amplitude = 0.0;   // (-1)^{t/2} t (I_0 + sum_{k < k_max} I_k)
  double tail_bound = 0.0;  // t * tail_certificate(n, t, k_max)
  double quad_error = 0.0;  // t * accumulated quadrature error
  int k_max = 0;
};

/// P[0,t] amplitude from the Bessel integral, even t >= 2 only.
/// k_max <= 0 selects max(n, 40).
BesselAmplitude p0_amplitude_bessel(int n, int t, int k_max = 0);

}  // namespace hcwalk::spectral
