#include <stdexcept>
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hcwalk/spectral.hpp"
#include "hcwalk/walk.hpp"
#include "oracles.hpp"

using namespace hcwalk;
using namespace hcwalk::spectral;

TEST_CASE("Chebyshev amplitude values") {
  for (int n : {1, 5, 60, 300}) CHECK(p0_amplitude_chebyshev(n, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(p0_amplitude_chebyshev(2, 2)) <= 1e-16);
  CHECK(p0_amplitude_chebyshev(10, 8) == doctest::Approx(0.0452224).epsilon(1e-13));
  const double a = p0_amplitude_chebyshev(50, 42);
  CHECK(a * a == doctest::Approx(6.0396476953549e-15).epsilon(1e-8));
  CHECK_THROWS_AS(p0_amplitude_chebyshev(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(p0_amplitude_chebyshev(3, -1), std::invalid_argument);
}

TEST_CASE("Chebyshev amplitude squared matches the simulator") {
  for (int n = 1; n <= 50; ++n) {
    const auto profile = scan({n, 60});
    for (const auto& rec : profile) {
      const double a = p0_amplitude_chebyshev(n, rec.t);
      CHECK(std::abs(a * a - rec.p0) <= 1e-9);
    }
  }
}

TEST_CASE("summation order does not matter") {
  for (int n : {10, 30, 60}) {
    for (int t = 0; t <= 2 * n; ++t) {
      const double asc = p0_amplitude_chebyshev(n, t, SummationOrder::ascending);
      const double desc = p0_amplitude_chebyshev(n, t, SummationOrder::descending);
      const double pair = p0_amplitude_chebyshev(n, t, SummationOrder::pairwise);
      CHECK(std::abs(asc * asc - desc * desc) <= 1e-12);
      CHECK(std::abs(asc * asc - pair * pair) <= 1e-12);
    }
  }
}

TEST_CASE("segment and bulk integrals against the composite-rule oracle") {
  const double a1 = grid_point(1);
  const double a2 = grid_point(2);
  const auto seg = segment_integral(4, 4, 1);
  const double ref_seg = oracle::simpson_richardson([](double x) { return oracle::segment_integrand(4, 4, x); },
                                                    4 * a1, 4 * a2, 20000);
  CHECK(seg.k == 1);
  CHECK(std::abs(seg.value - ref_seg) <= 1e-10);
  CHECK(seg.quad_error <= std::max(1e-14, 1e-6 * std::abs(seg.value)));

  const auto bulk = bulk_integral(4, 2);
  const double ref_bulk = oracle::simpson_richardson([](double x) { return oracle::segment_integrand(4, 2, x); },
                                                     0.0, 4 * a1, 20000);
  CHECK(bulk.k == 0);
  CHECK(std::abs(bulk.value - ref_bulk) <= 1e-10);
}

TEST_CASE("integrand endpoints are zeros of cos^n") {
  for (int k = 1; k < 10; ++k) CHECK(std::abs(std::cos(grid_point(k))) < 1e-15 * (k + 1));
}

TEST_CASE("segment magnitudes follow the k^-3/2 envelope") {
  for (int n : {4, 10, 20}) {
    for (int nu : {1, n / 2, n - 1, n + 3}) {
      for (int k = n; k < n + 30; ++k) {
        const auto seg = segment_integral(n, nu, k);
        CHECK(std::abs(seg.value) <= 30.0 * std::sqrt(n) * std::exp2(-n) * std::pow(k, -1.5));
      }
    }
  }
  const auto s = segment_integral(20, 17, 20);
  CHECK(std::abs(s.value) <= 30.0 * std::sqrt(20.0) * std::exp2(-20) * std::pow(20.0, -1.5));
}

TEST_CASE("tail certificate bounds the actual tail") {
  for (int n : {3, 6, 12}) {
    for (int nu : {2, n - 1, n + 2}) {
      if (nu < 1) continue;
      for (int first : {1, n, 2 * n}) {
        double tail = 0.0;
        for (int k = first; k < first + 400; ++k) tail += segment_integral(n, nu, k).value;
        const double far = tail_certificate(n, nu, first + 400);
        CHECK(std::abs(tail) <= tail_certificate(n, nu, first) + far);
      }
    }
  }
  for (int n = 2; n <= 60; ++n) CHECK(tail_certificate(n, n - 1, n) <= 100.0 * std::sqrt(n) / std::exp2(n));
}

TEST_CASE("Bessel amplitude agrees with the Chebyshev sum") {
  for (auto [n, t] : {std::pair{10, 8}, {2, 2}, {20, 12}, {7, 4}}) {
    const auto b = p0_amplitude_bessel(n, t);
    CHECK(b.k_max == std::max(n, 40));
    const double cheb = p0_amplitude_chebyshev(n, t);
    CHECK(std::abs(std::abs(b.amplitude) - std::abs(cheb)) <= b.tail_bound + b.quad_error + 1e-9);
  }
  CHECK(std::abs(p0_amplitude_bessel(2, 2).amplitude) <= p0_amplitude_bessel(2, 2).tail_bound);
  CHECK_THROWS_AS(p0_amplitude_bessel(10, 3), std::invalid_argument);
  CHECK_THROWS_AS(p0_amplitude_bessel(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(p0_amplitude_bessel(50, 8, 40), std::invalid_argument);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(segment_integral(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(segment_integral(4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(segment_integral(4, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(tail_certificate(4, 2, 0), std::invalid_argument);
}
