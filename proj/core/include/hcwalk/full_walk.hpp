#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hcwalk/walk.hpp"

namespace hcwalk {

/// Dense amplitude vector over all 2^n * n basis states |x,i>.
///
/// Vertex x is an n-bit integer whose bit i-1 holds x_i; directions are
/// 1-based as in the walk definition. Only meant as a brute-force reference
/// for the symmetric simulator, so n is capped at 16 (about 8 MB per state).
class FullState {
 public:
  static constexpr int kMaxDimension = 16;

  explicit FullState(int n);

  [[nodiscard]] int dimension() const { return n_; }
  [[nodiscard]] std::uint32_t vertex_count() const { return std::uint32_t{1} << n_; }

  [[nodiscard]] double amplitude(std::uint32_t x, int i) const { return amp_[index(x, i)]; }
  void set_amplitude(std::uint32_t x, int i, double value) { amp_[index(x, i)] = value; }

  [[nodiscard]] std::span<const double> amplitudes() const { return amp_; }
  [[nodiscard]] std::span<double> amplitudes() { return amp_; }

  [[nodiscard]] double norm_squared() const;

 private:
  [[nodiscard]] std::size_t index(std::uint32_t x, int i) const;

  int n_;
  std::vector<double> amp_;
};

FullState full_start(int n);

/// D_n on every vertex, then S|x,i> = |x^(i),i>.
FullState full_step(const FullState& state);

/// <w,->|state> and <w,<-|state> for every level.
SymmetricState project_symmetric(const FullState& state);

/// Squared norm of the component orthogonal to the symmetric subspace.
double residual_outside_symmetric(const FullState& state);

/// P(x,t) = sum_i |alpha_{x,i}|^2.
double full_vertex_probability(const FullState& state, std::uint32_t x);

}  // namespace hcwalk
