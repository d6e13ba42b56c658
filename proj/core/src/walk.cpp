#include "hcwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hcwalk {

namespace {

void require_dimension(int n) {
  if (n < 1) throw std::invalid_argument("hypercube dimension must be >= 1, got " + std::to_string(n));
}

void require_level(int n, int w) {
  if (w < 0 || w > n) {
    throw std::out_of_range("level " + std::to_string(w) + " outside [0, " + std::to_string(n) + "]");
  }
}

}  // namespace

SymmetricState::SymmetricState(int n) : n_(n) {
  require_dimension(n);
  right_.assign(static_cast<std::size_t>(n), 0.0);
  left_.assign(static_cast<std::size_t>(n), 0.0);
}

double SymmetricState::right(int w) const {
  if (w < 0 || w >= n_) throw std::out_of_range("|w,->> exists only for w in [0, n-1]");
  return right_[static_cast<std::size_t>(w)];
}

double SymmetricState::left(int w) const {
  if (w < 1 || w > n_) throw std::out_of_range("|w,<-> exists only for w in [1, n]");
  return left_[static_cast<std::size_t>(w - 1)];
}

void SymmetricState::set_right(int w, double value) {
  if (w < 0 || w >= n_) throw std::out_of_range("|w,->> exists only for w in [0, n-1]");
  right_[static_cast<std::size_t>(w)] = value;
}

void SymmetricState::set_left(int w, double value) {
  if (w < 1 || w > n_) throw std::out_of_range("|w,<-> exists only for w in [1, n]");
  left_[static_cast<std::size_t>(w - 1)] = value;
}

double SymmetricState::norm_squared() const {
  double sum = 0.0;
  for (double a : right_) sum += a * a;
  for (double a : left_) sum += a * a;
  return sum;
}

SymmetricState start_state(int n) {
  SymmetricState s(n);
  s.set_right(0, 1.0);
  return s;
}

Mat2 coin_matrix(int n, int w) {
  require_dimension(n);
  require_level(n, w);
  const double nd = n;
  const double off = 2.0 * std::sqrt(static_cast<double>(w) * (n - w)) / nd;
  return Mat2{{{(n - 2.0 * w) / nd, off}, {off, (2.0 * w - n) / nd}}};
}

SymmetricState step(const SymmetricState& state) {
  const int n = state.dimension();
  SymmetricState next(n);
  auto r = state.right_amplitudes();
  auto l = state.left_amplitudes();
  for (int w = 0; w <= n; ++w) {
    const double ar = w < n ? r[static_cast<std::size_t>(w)] : 0.0;
    const double al = w > 0 ? l[static_cast<std::size_t>(w - 1)] : 0.0;
    const Mat2 c = coin_matrix(n, w);
    if (w < n) next.set_left(w + 1, c[0][0] * ar + c[0][1] * al);
    if (w > 0) next.set_right(w - 1, c[1][0] * ar + c[1][1] * al);
  }
  return next;
}

double level_probability(const SymmetricState& state, int w) {
  const int n = state.dimension();
  require_level(n, w);
  double p = 0.0;
  if (w < n) p += state.right(w) * state.right(w);
  if (w > 0) p += state.left(w) * state.left(w);
  return p;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  std::vector<double> row(static_cast<std::size_t>(k) + 1, 0.0);
  row[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j > 0; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  }
  return row[static_cast<std::size_t>(k)];
}

double vertex_probability(const SymmetricState& state, int w) {
  return level_probability(state, w) / binomial(state.dimension(), w);
}

ProbabilityProfile profile_of(const SymmetricState& state, int t) {
  const int n = state.dimension();
  ProbabilityProfile rec;
  rec.t = t;
  rec.p0 = level_probability(state, 0);
  rec.max_vertex_prob = -1.0;
  double c = 1.0;  // C(n, w), updated multiplicatively
  for (int w = 0; w <= n; ++w) {
    if (w > 0) c = c * (n - w + 1) / w;
    const double p = level_probability(state, w) / c;
    if (p > rec.max_vertex_prob) {
      rec.max_vertex_prob = p;
      rec.argmax_w = w;
    }
  }
  return rec;
}

std::vector<ProbabilityProfile> scan(const WalkParams& params) {
  if (params.t_max < 0) throw std::invalid_argument("t_max must be >= 0");
  std::vector<ProbabilityProfile> out;
  out.reserve(static_cast<std::size_t>(params.t_max) + 1);
  SymmetricState s = start_state(params.n);
  for (int t = 0; t <= params.t_max; ++t) {
    if (t > 0) s = step(s);
    out.push_back(profile_of(s, t));
  }
  return out;
}

TMin t_min(std::span<const ProbabilityProfile> profile, Parity parity) {
  TMin best{-1, 0.0};
  for (const auto& rec : profile) {
    if (parity == Parity::even && rec.t % 2 != 0) continue;
    if (parity == Parity::odd && rec.t % 2 == 0) continue;
    if (best.t < 0 || rec.max_vertex_prob < best.probability) best = {rec.t, rec.max_vertex_prob};
  }
  if (best.t < 0) throw std::invalid_argument("t_min needs a nonempty profile");
  return best;
}

std::vector<SymmetricState> trajectory(int n, int t_max) {
  std::vector<SymmetricState> out;
  out.reserve(static_cast<std::size_t>(t_max) + 1);
  out.push_back(start_state(n));
  for (int t = 1; t <= t_max; ++t) out.push_back(step(out.back()));
  return out;
}

}  // namespace hcwalk
