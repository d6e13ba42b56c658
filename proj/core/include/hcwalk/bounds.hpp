#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hcwalk::bounds {

struct BoundParams {
  double alpha = 0.7326;
  double c = 0.13368;
  double t_coeff = 0.8663;
  double rate = 1.4818;
};

/// One checked inequality computed <= bound. For walk-based checks `nu`
/// holds the step t; for integral checks it is the Bessel order.
struct BoundReport {
  std::string name;
  int n = 0;
  int nu = 0;
  double computed = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - computed
  bool pass = false;
};

BoundReport make_report(std::string name, int n, int nu, double computed, double bound);

bool all_pass(const std::vector<BoundReport>& reports);

// ---- integral bounds ----------------------------------------------------

double tail_bound(int n);                  // 100 sqrt(n) / 2^n
double middle_bound(int n);                // 4000 sqrt(n) / 1.541^n
double bulk_bound(int n, double alpha);    // 3 / (1 + alpha)^{alpha n / 2}

/// n >= 2, pi/6 < alpha < 1, n alpha >= 1 and n alpha < nu < n.
bool theorem2_admissible(int n, int nu, double alpha);

/// Reports "tail", "middle", "bulk". Computed values are |sum of I_k| plus
/// accumulated quadrature error; the tail sums `tail_segments` segments from
/// k = n and adds the certificate for everything beyond.
std::array<BoundReport, 3> theorem2_bounds(int n, int nu, double alpha = 0.7326, int tail_segments = 40);

/// Envelope of the integrand on the vertical ray n a_k + iy, 1 <= k < n,
/// against 860 * 1.541^-n |n a_k + iy|^-1.5. |H| is replaced by its
/// large-argument bound, so this compares bounds with bounds.
BoundReport middle_ray_envelope(int n, int nu, int k, double y);

/// Difference of the integrand on neighbouring rays, k >= n > nu, against
/// 15 n^2 2^-n |n a_k + iy|^-2.5. Bound-versus-bound as above.
BoundReport tail_ray_difference(int n, int nu, int k, double y);

// ---- walk bounds ----------------------------------------------------------

/// n^w / w! * p0, evaluated in log space. Requires 0 <= w < n/2.
double lemma1_amplification(int n, int w, double p0);

/// P[w,t] <= n^w/w! * max_{t' in [t-w, t+w], t' >= 0} P[0,t'] for t <= t_max, w < w_limit.
std::vector<BoundReport> lemma1_empirical(int n, int t_max, int w_limit);

/// The two per-step inequalities behind the amplification bound, checked on
/// every step of the trajectory up to t_max ("chain" and "step" reports).
/// Bounds carry a 1e-12 relative allowance for rounding.
std::vector<BoundReport> lemma1_proof_inequalities(int n, int t_max);

/// "theorem1": max_x P(x, floor(t_coeff n)) against C * rate^-n.
/// "envelope": max_x P(x, t_min) against 5 * 1.93^-n, t_min over t <= 2n.
std::array<BoundReport, 2> theorem1_check(int n, const BoundParams& params, double c_empirical);

/// Smallest C with max_x P(x, floor(t_coeff n)) <= C * rate^-n.
double calibrate_theorem1_constant(int n, const BoundParams& params);

// ---- entropy, equilibrium, factorials ------------------------------------

/// H(p) in bits, H(0) = H(1) = 0.
double binary_entropy(double p);

/// (n+1) 2^{-n H(w/n)}.
double entropy_binomial_bound(int n, int w);

/// 1/C(n,w) against entropy_binomial_bound, compared exactly in log space.
BoundReport entropy_binomial_report(int n, int w);

/// e^c (1-c)^{1-c} / (2-2c)^{1-2c}.
double equilibrium_case1(double c);
/// c^c (1-c)^{1-c} = 2^{-H(c)}.
double equilibrium_case2(double c);
/// Root in [0.05, 0.3] of case1 = case2, by bisection.
double equilibrium_c();

/// Log-space links of the factorial chain with w = floor(c n): Robbins'
/// lower bound on n!, his upper bound on (n-w)!, and
/// (n-w)!/n! < 2 * 0.99068^-n * n^-w. Factorials are exact big integers.
std::vector<BoundReport> stirling_bounds_check(int n, double c);

// ---- appendix constants ----------------------------------------------------

/// Numeric constants and inequalities used by the integral estimates, each
/// as a report (beta integrals by quadrature, ray maximum of Im g, the cosine
/// bound, variation and eta constants, rate constants).
std::vector<BoundReport> appendix_reports();

/// J_nu(nu) < 0.45 nu^{-1/3} for nu in [1, nu_max].
std::vector<BoundReport> bessel_diagonal_reports(int nu_max);

/// max over t in (0,1] of |J_nu(nu t)| / (J_nu(nu) t^nu e^{nu (1-t^2)/2}) against 1.
std::vector<BoundReport> bessel_scaling_reports(int nu_max, int grid = 200);

}  // namespace hcwalk::bounds
