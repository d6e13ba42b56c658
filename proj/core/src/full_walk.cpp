#include "hcwalk/full_walk.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hcwalk {

FullState::FullState(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("full-state dimension must be in [1, 16], got " + std::to_string(n));
  }
  amp_.assign(static_cast<std::size_t>(n) << n, 0.0);
}

std::size_t FullState::index(std::uint32_t x, int i) const {
  if (x >= vertex_count()) throw std::out_of_range("vertex index " + std::to_string(x) + " out of range");
  if (i < 1 || i > n_) throw std::out_of_range("direction " + std::to_string(i) + " out of range");
  return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i - 1);
}

double FullState::norm_squared() const {
  double sum = 0.0;
  for (double a : amp_) sum += a * a;
  return sum;
}

FullState full_start(int n) {
  FullState s(n);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 1; i <= n; ++i) s.set_amplitude(0, i, a);
  return s;
}

FullState full_step(const FullState& state) {
  const int n = state.dimension();
  const auto nn = static_cast<std::size_t>(n);
  FullState next(n);
  auto in = state.amplitudes();
  auto out = next.amplitudes();
  std::vector<double> coined(nn);
  for (std::uint32_t x = 0; x < state.vertex_count(); ++x) {
    const double* a = in.data() + x * nn;
    double total = 0.0;
    for (std::size_t j = 0; j < nn; ++j) total += a[j];
    // D_n|x,i> = -((n-2)/n)|x,i> + (2/n) sum_{j != i} |x,j>  ==  (2/n) total - a_i
    for (std::size_t j = 0; j < nn; ++j) coined[j] = 2.0 * total / n - a[j];
    for (std::size_t j = 0; j < nn; ++j) {
      const std::uint32_t y = x ^ (std::uint32_t{1} << j);
      out[y * nn + j] = coined[j];
    }
  }
  return next;
}

SymmetricState project_symmetric(const FullState& state) {
  const int n = state.dimension();
  std::vector<double> right(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> left(static_cast<std::size_t>(n) + 1, 0.0);
  auto amp = state.amplitudes();
  const auto nn = static_cast<std::size_t>(n);
  for (std::uint32_t x = 0; x < state.vertex_count(); ++x) {
    const int w = std::popcount(x);
    for (std::size_t j = 0; j < nn; ++j) {
      const double a = amp[x * nn + j];
      if ((x >> j) & 1U) {
        left[static_cast<std::size_t>(w)] += a;
      } else {
        right[static_cast<std::size_t>(w)] += a;
      }
    }
  }
  SymmetricState s(n);
  for (int w = 0; w <= n; ++w) {
    const double c = binomial(n, w);
    if (w < n) s.set_right(w, right[static_cast<std::size_t>(w)] / std::sqrt(c * (n - w)));
    if (w > 0) s.set_left(w, left[static_cast<std::size_t>(w)] / std::sqrt(c * w));
  }
  return s;
}

double residual_outside_symmetric(const FullState& state) {
  return std::abs(state.norm_squared() - project_symmetric(state).norm_squared());
}

double full_vertex_probability(const FullState& state, std::uint32_t x) {
  double p = 0.0;
  for (int i = 1; i <= state.dimension(); ++i) {
    const double a = state.amplitude(x, i);
    p += a * a;
  }
  return p;
}

}  // namespace hcwalk
