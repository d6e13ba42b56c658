#include <stdexcept>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hcwalk/specfun.hpp"
#include "oracles.hpp"

using namespace hcwalk::specfun;
constexpr double kPi = std::numbers::pi;

TEST_CASE("Chebyshev polynomials") {
  for (double z : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
    CHECK(chebyshev_T(0, z) == 1.0);
    CHECK(chebyshev_T(1, z) == doctest::Approx(z).epsilon(1e-12));
  }
  CHECK(chebyshev_T(2, 0.0) == -1.0);
  CHECK(chebyshev_T(2, 1.0) == 1.0);
  CHECK(chebyshev_T(2, -1.0) == 1.0);
  CHECK(chebyshev_T(3, -1.0) == -1.0);
  CHECK(std::abs(chebyshev_T(10, 0.3) - static_cast<double>(oracle::chebyshev_recurrence(10, 0.3L))) <= 1e-12);
  CHECK(chebyshev_T(4, 1.0 + 5e-16) == 1.0);
  CHECK_THROWS_AS(chebyshev_T(3, 1.0 + 1e-12), std::domain_error);
  CHECK_THROWS_AS(chebyshev_T(-1, 0.5), std::invalid_argument);
}

TEST_CASE("Chebyshev trig form against the recurrence for t <= 200") {
  double worst = 0.0;
  for (int t = 0; t <= 200; ++t) {
    for (int i = 0; i <= 200; ++i) {
      const double z = -1.0 + i / 100.0;
      worst = std::max(worst, std::abs(chebyshev_T(t, z) - static_cast<double>(oracle::chebyshev_recurrence(t, z))));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("Bessel J special values and domain") {
  CHECK(bessel_J(0, 0.0) == 1.0);
  for (int nu : {1, 2, 50}) CHECK(bessel_J(nu, 0.0) == 0.0);
  CHECK_THROWS_AS(bessel_J(-1, 1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_J(501, 1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_J(3, -1.0), std::domain_error);
  CHECK_THROWS_AS(bessel_J(3, 2e6), std::domain_error);
}

TEST_CASE("Bessel J against MPFR") {
  // Relative error where J is monotone (x < nu); beyond the turning point the
  // error is measured against the local amplitude sqrt(J^2 + Y^2).
  const std::vector<int> orders{0, 1, 2, 3, 5, 10, 17, 30, 43, 60, 100, 150, 200};
  const std::vector<double> args{1e-6, 1e-3, 0.1, 0.5, 1.0, 2.5, 5.0, 10.0, 17.0, 24.9, 25.1, 30.0, 43.5,
                                 60.0, 99.0, 150.0, 200.0, 500.0, 1000.0, 3000.0, 5000.0, 11000.0, 1e5};
  double worst = 0.0;
  for (int nu : orders) {
    for (double x : args) {
      const double ref = oracle::bessel_j(nu, x);
      const double got = bessel_J(nu, x);
      double scale = std::abs(ref);
      if (x >= nu) scale = std::hypot(ref, oracle::bessel_y(nu, x));
      const double err = std::abs(got - ref) / (scale + 1e-300);
      worst = std::max(worst, err);
      CHECK_MESSAGE(err <= 1e-10, "nu=" << nu << " x=" << x << " got " << got << " ref " << ref);
      CHECK(std::abs(got) <= 1.0);
    }
  }
  MESSAGE("worst Bessel error " << worst);
}

TEST_CASE("Bessel recurrence") {
  for (int nu = 1; nu < 150; nu += 7) {
    for (double x : {0.7, 9.0, 31.0, 120.0, 800.0, 9000.0}) {
      const double lhs = bessel_J(nu - 1, x) + bessel_J(nu + 1, x);
      const double rhs = 2.0 * nu / x * bessel_J(nu, x);
      const double scale = std::max({std::abs(bessel_J(nu - 1, x)), std::abs(bessel_J(nu + 1, x)), std::abs(rhs)});
      CHECK(std::abs(lhs - rhs) <= 1e-9 * scale + 1e-300);
    }
  }
}

TEST_CASE("Bessel diagonal and scaling bounds") {
  for (int nu = 1; nu <= 200; ++nu) {
    const double d = bessel_J(nu, nu);
    CHECK(d > 0.0);
    CHECK(d < 0.45 / std::cbrt(nu));
  }
  for (int nu = 1; nu <= 60; ++nu) {
    const double d = bessel_J(nu, nu);
    for (int i = 1; i <= 100; ++i) {
      const double t = i / 100.0;
      CHECK(std::abs(bessel_J(nu, nu * t)) <= d * std::pow(t, nu) * std::exp(nu * (1.0 - t * t) / 2.0) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("Hankel coefficients and remainder bound") {
  CHECK(hankel_coefficient(0.5, 1) == 0.0);
  CHECK(hankel_coefficient(3.0, 0) == 1.0);
  CHECK(hankel_coefficient(2.0, 1) == doctest::Approx(15.0 / 8.0));
  // The bound must hold for the actual remainder of J.
  for (int nu : {0, 3, 8}) {
    for (double x : {40.0, 100.0, 1000.0}) {
      for (int terms : {1, 2, 4}) {
        const double chi = x - nu * kPi / 2.0 - kPi / 4.0;
        double p = 0.0;
        double q = 0.0;
        for (int k = 0; k < terms; ++k) {
          const double term = hankel_coefficient(nu, k) / std::pow(x, k);
          const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
          (k % 2 == 0 ? p : q) += sign * term;
        }
        const double approx = std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
        const double bound = std::sqrt(2.0 / (kPi * x)) * hankel_remainder_bound(nu, terms, x);
        CHECK(std::abs(oracle::bessel_j(nu, x) - approx) <= bound);
      }
    }
  }
}

TEST_CASE("Hankel rho and envelope") {
  const double rho = hankel_rho_bound(10.0, cplx(200.0, 0.0));
  CHECK(rho == doctest::Approx(99.75 / 200.0 * std::exp(99.75 / 200.0)).epsilon(1e-14));
  CHECK(rho == doctest::Approx(0.8212725).epsilon(1e-6));

  for (int n : {2, 5, 20, 40}) {
    for (double nu = 0.5; nu < n; nu += 0.5) {
      const auto env = hankel_envelope(nu, cplx(n * n, 0.0), n);
      CHECK(env.rho_bound < std::numbers::e);
      CHECK(env.modulus_bound == doctest::Approx(3.0 / n));
    }
  }
  const auto env = hankel_envelope(7.0, cplx(60.0, 80.0), 8);
  CHECK(env.modulus_bound == doctest::Approx(3.0 * std::exp(-80.0) / 10.0));
  CHECK(std::isfinite(env.eta_bound));
  CHECK_THROWS_AS(hankel_envelope(3.0, cplx(10.0, 0.0), 4), std::domain_error);
  CHECK_THROWS_AS(hankel_envelope(5.0, cplx(100.0, 0.0), 4), std::domain_error);
  CHECK_THROWS_AS(hankel_envelope(1.0, cplx(-100.0, 0.0), 4), std::domain_error);
}

TEST_CASE("Hankel modulus bound dominates |H|") {
  for (int nu : {1, 5, 12}) {
    for (double x : {20.0, 200.0, 3000.0}) {
      const double h = std::hypot(oracle::bessel_j(nu, x), oracle::bessel_y(nu, x));
      CHECK(h <= hankel_modulus_general(nu, cplx(x, 0.0)));
    }
  }
}

TEST_CASE("xi") {
  const double w = 2.0;
  const cplx expected(0.0, -std::sqrt(w * w - 1.0) + std::acos(1.0 / w) - kPi / 2.0);
  const cplx got = xi(cplx(0.0, -w));
  CHECK(std::abs(got - expected) <= 1e-12);
  // Continuity from the right half-plane onto the ray.
  CHECK(std::abs(xi(cplx(1e-9, -w)) - got) <= 1e-7);

  CHECK(std::abs(xi(cplx(1e8, 0.0)) - 1e8) < 1e-6);

  const cplx z(1.0, 1.0);
  const double h = 1e-6;
  const cplx fd = (xi(z + h) - xi(z - h)) / (2.0 * h);
  CHECK(std::abs(fd - std::sqrt(1.0 + z * z) / z) <= 1e-8);

  CHECK_THROWS_AS(xi(cplx(-1.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS(xi(cplx(0.0, -0.5)), std::domain_error);
}

TEST_CASE("g function and its ray maximum") {
  CHECK(std::abs(g_function(cplx(1.0, 0.0)) - 1.0) <= 1e-15);
  for (double x : {1.0, 1.5, 10.0}) CHECK(g_function(cplx(x, 0.0)).imag() == 0.0);
  CHECK_THROWS_AS(g_function(cplx(0.5, 0.0)), std::domain_error);
  CHECK_THROWS_AS(g_function(cplx(2.0, -1.0)), std::domain_error);

  const double t0 = cubic_root_t0();
  CHECK(t0 * t0 * t0 + t0 * t0 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(t0 == doctest::Approx(0.7548).epsilon(1e-4));

  const auto m = g_ray_maximum();
  CHECK(m.y_numeric == doctest::Approx(0.86883).epsilon(1e-5));
  CHECK(std::abs(m.y_numeric - m.y_closed_form) <= 1e-9);
  CHECK(m.value.real() == doctest::Approx(1.29797).epsilon(1e-5));
  CHECK(m.value.imag() == doctest::Approx(0.26066).epsilon(1e-5));
  for (double y = 0.0; y <= 5.0; y += 0.01) CHECK(g_function(cplx(1.0, y)).imag() <= m.value.imag() + 1e-15);
}

TEST_CASE("Im g stays below 0.2607 on the quarter plane") {
  double worst = 0.0;
  for (int i = 0; i <= 300; ++i)
    for (int j = 0; j <= 300; ++j) {
      const cplx z(1.0 + std::expm1(i / 40.0), std::expm1(j / 40.0));
      worst = std::max(worst, g_function(z).imag());
    }
  CHECK(worst < 0.2607);
}

TEST_CASE("U1, variation and eta") {
  CHECK(u1(0.0) == 0.0);
  CHECK(u1(1.0) == doctest::Approx(-1.0 / 12.0));
  CHECK(variation_bound(kPi / 2.0) == doctest::Approx(2.272365).epsilon(1e-6));
  double prev = variation_bound(1.0001);
  for (int i = 1; i <= 1000; ++i) {
    const double v = variation_bound(1.0001 + i * 0.099);
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(variation_bound(1.0), std::domain_error);
  CHECK(1.0 + 2.0 * 2.273 * std::exp(2.0 * 2.273) < 430.0);
  for (double nu : {1.0, 2.0, 10.0}) CHECK(1.0 + eta_bound(nu, kPi / 2.0) < 430.0);
  CHECK_THROWS_AS(eta_bound(0.0, 2.0), std::domain_error);
}

TEST_CASE("beta integrals") {
  const auto one = beta_half_integrals(1.0);
  CHECK(one.three_quarter == doctest::Approx(2.62206).epsilon(1e-5));
  CHECK(one.five_quarter == doctest::Approx(1.1981402347355922).epsilon(1e-13));
  CHECK(beta_half_integrals(4.0).three_quarter == doctest::Approx(one.three_quarter / 2.0).epsilon(1e-14));
  CHECK(beta_half_integrals(4.0).five_quarter == doctest::Approx(one.five_quarter / 8.0).epsilon(1e-14));
  for (double a : {0.3, 1.0, 7.0}) {
    const auto q = beta_half_integrals_quadrature(a);
    const auto c = beta_half_integrals(a);
    CHECK(q.three_quarter == doctest::Approx(c.three_quarter).epsilon(1e-11));
    CHECK(q.five_quarter == doctest::Approx(c.five_quarter).epsilon(1e-11));
  }
  CHECK_THROWS_AS(beta_half_integrals(0.0), std::domain_error);
  CHECK_THROWS_AS(beta_half_integrals_quadrature(-1.0), std::domain_error);
}

TEST_CASE("cosine Gaussian bound") {
  CHECK(cos_gaussian_bound_check(std::vector<double>{0.0}));
  CHECK(std::cos(1.0) <= std::exp(-0.5));
  std::vector<double> grid(1000000);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 0.5 * kPi * static_cast<double>(i) / grid.size();
  CHECK(cos_gaussian_bound_check(grid));
  CHECK_THROWS_AS(cos_gaussian_bound_check(std::vector<double>{2.0}), std::domain_error);
}

TEST_CASE("Bessel cosine transform reproduces Chebyshev polynomials") {
  for (int t : {2, 6, 12, 20}) {
    for (double z : {0.0, 0.25, -0.5, 0.9, -1.0}) {
      const auto r = chebyshev_via_bessel(t, z);
      CHECK(r.certificate <= 1e-4);
      CHECK(std::abs(r.value - chebyshev_T(t, z)) <= r.certificate + 1e-9);
    }
  }
  // Dropping the analytic tail leaves an error far above the certificate.
  const auto r = chebyshev_via_bessel(4, 0.5);
  CHECK(std::abs(r.truncated - chebyshev_T(4, 0.5)) > 100.0 * r.certificate);
  CHECK_THROWS_AS(chebyshev_via_bessel(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(chebyshev_via_bessel(4, 1.5), std::domain_error);
}
