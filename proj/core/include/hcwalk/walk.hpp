#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace hcwalk {

struct WalkParams {
  int n = 1;
  int t_max = 0;
};

/// Amplitudes of the walk restricted to the permutation-symmetric subspace.
///
/// |w,->> is the uniform superposition of the states |x,i> with |x| = w and
/// x_i = 0 (the walker will move up a level), |w,<-> the same with x_i = 1.
/// The first exists for w in [0, n-1], the second for w in [1, n]. The walk
/// operator and the start state are real, so amplitudes are stored as doubles.
class SymmetricState {
 public:
  explicit SymmetricState(int n);

  [[nodiscard]] int dimension() const { return n_; }

  /// Amplitude of |w,->>; w in [0, n-1].
  [[nodiscard]] double right(int w) const;
  /// Amplitude of |w,<->; w in [1, n].
  [[nodiscard]] double left(int w) const;
  void set_right(int w, double value);
  void set_left(int w, double value);

  [[nodiscard]] std::span<const double> right_amplitudes() const { return right_; }
  /// Indexed by w - 1.
  [[nodiscard]] std::span<const double> left_amplitudes() const { return left_; }

  [[nodiscard]] double norm_squared() const;

 private:
  int n_;
  std::vector<double> right_;
  std::vector<double> left_;
};

/// Row-major 2x2 matrix acting on (alpha_right, alpha_left) of one level.
using Mat2 = std::array<std::array<double, 2>, 2>;

/// psi_start: the walker at 0^n with the coin in the uniform superposition,
/// which is exactly |0,->>.
SymmetricState start_state(int n);

/// Grover coin restricted to span{|w,->>, |w,<->}. At w = 0 only the
/// (0,0) entry and at w = n only the (1,1) entry act on an existing sector.
Mat2 coin_matrix(int n, int w);

/// One walk step: coin on every level, then the shift moves the coin's
/// ->-output at level w to |w+1,<-> and its <--output to |w-1,->>.
SymmetricState step(const SymmetricState& state);

/// P[w,t] = alpha_right(w)^2 + alpha_left(w)^2.
double level_probability(const SymmetricState& state, int w);

/// P(x,t) for any x with |x| = w, i.e. P[w,t] / C(n,w).
double vertex_probability(const SymmetricState& state, int w);

/// Binomial coefficient as a double (Pascal's rule, so no intermediate overflow).
double binomial(int n, int k);

struct ProbabilityProfile {
  int t = 0;
  double p0 = 0.0;
  double max_vertex_prob = 0.0;
  int argmax_w = 0;
};

ProbabilityProfile profile_of(const SymmetricState& state, int t);

/// Records for t = 0..t_max; argmax ties go to the smaller level.
std::vector<ProbabilityProfile> scan(const WalkParams& params);

enum class Parity { all, even, odd };

struct TMin {
  int t = 0;
  double probability = 0.0;
};

/// Smallest t attaining the minimum of max_x P(x,t) among records of the
/// requested parity.
TMin t_min(std::span<const ProbabilityProfile> profile, Parity parity = Parity::all);

/// Full trajectory psi_0 .. psi_{t_max}.
std::vector<SymmetricState> trajectory(int n, int t_max);

}  // namespace hcwalk
