#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <vector>

#include "rmz/burgers_exact.hpp"

using namespace rmz;

namespace {

constexpr double kPi = std::numbers::pi;

/// Brute-force characteristic fan: x(xi) = xi + t sin(xi) tabulated densely
/// on [0, pi] and inverted by bisection on the table plus local linear
/// interpolation. Valid pre-shock and on the single-valued branch.
double fan_value(double x, double t, int points = 1'000'000) {
  std::vector<double> xs(points + 1);
  for (int i = 0; i <= points; ++i) {
    const double xi = kPi * i / points;
    xs[i] = xi + t * std::sin(xi);
  }
  // xs is increasing for t < 1.
  int lo = 0, hi = points;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    (xs[mid] <= x ? lo : hi) = mid;
  }
  const double xi_lo = kPi * lo / points;
  const double xi_hi = kPi * hi / points;
  const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
  const double xi = xi_lo + w * (xi_hi - xi_lo);
  return std::sin(xi);
}

}  // namespace

TEST_CASE("initial condition is recovered") {
  BurgersExact oracle;
  for (double x : {0.1, 0.7, 1.5, 2.9, 3.7, 5.0, 6.1}) {
    CHECK(oracle.value(x, 0.0) == doctest::Approx(std::sin(x)).epsilon(1e-13));
  }
  CHECK(oracle.value(kPi, 0.5) == 0.0);
  CHECK(oracle.value(0.0, 2.0) == 0.0);
}

TEST_CASE("pre-shock values match the characteristic fan") {
  BurgersExact oracle;
  for (double t : {0.3, 0.6, 0.9}) {
    for (double x : {kPi / 2, 1.0, 2.0, 3.0}) {
      CHECK(std::abs(oracle.value(x, t) - fan_value(x, t)) < 1e-10);
    }
  }
}

TEST_CASE("odd symmetry about the shock position") {
  BurgersExact oracle;
  for (double t : {0.5, 2.0, 30.0}) {
    for (double x : {0.4, 1.3, 2.8}) {
      CHECK(oracle.value(2.0 * kPi - x, t) == doctest::Approx(-oracle.value(x, t)).epsilon(1e-13));
    }
  }
}

TEST_CASE("long-time similarity form") {
  // The decaying standing shock tends to u = x/(1+t) on (0, pi) and
  // (x - 2 pi)/(1+t) on (pi, 2 pi).
  BurgersExact oracle;
  const double t = 100.0;
  for (double x : {0.5, 1.5, 2.5, 3.0}) {
    CHECK(oracle.value(x, t) == doctest::Approx(x / (1.0 + t)).epsilon(1e-3));
  }
  for (double x : {3.5, 4.5, 5.5}) {
    CHECK(oracle.value(x, t) == doctest::Approx((x - 2.0 * kPi) / (1.0 + t)).epsilon(1e-3));
  }
  // Left shock state ~ pi/(1+t).
  CHECK(oracle.value(kPi - 1e-9, t) == doctest::Approx(kPi / (1.0 + t)).epsilon(1e-3));
}

TEST_CASE("resolved energy at t = 0 is a quarter") {
  BurgersExact oracle;
  for (int n : {4, 16, 64}) {
    CHECK(oracle.resolved_energy(0.0, n) == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("fourier coefficients are odd-imaginary and conjugate symmetric") {
  BurgersExact oracle;
  for (double t : {0.5, 5.0}) {
    const auto c = oracle.fourier_coefficients(t, 8);
    for (int k = -8; k < 8; ++k) {
      CHECK(std::abs(c[k + 8].real()) < 1e-12);
      if (k > -8) {
        CHECK(std::abs(c[k + 8] - std::conj(c[-k + 8])) < 1e-12);
      }
    }
  }
}

TEST_CASE("pre-shock spectrum is concentrated in the resolved range") {
  // Compare the N = 16 resolved energy against a dense-FFT evaluation of the
  // total energy at t = 0.5; the tail beyond |k| = 8 carries ~2e-6.
  BurgersExact oracle;
  const double t = 0.5;
  const int samples = 8192;
  double total = 0.0;  // (1/2) sum |u_k|^2 = (1/2) (1/2pi) int u^2 dx by Parseval
  for (int i = 0; i < samples; ++i) {
    const double x = 2.0 * kPi * i / samples;
    const double u = oracle.value(x, t);
    total += u * u;
  }
  total /= 2.0 * samples;
  const double resolved = oracle.resolved_energy(t, 16);
  CHECK(std::abs(total - resolved) < 5e-6);
  CHECK(total >= resolved - 1e-12);
}

TEST_CASE("energy decays after the shock forms") {
  BurgersExact oracle;
  double prev = oracle.resolved_energy(1.0, 16);
  for (double t : {2.0, 5.0, 10.0, 30.0, 100.0}) {
    const double e = oracle.resolved_energy(t, 16);
    CHECK(e < prev);
    CHECK(e > 0.0);
    prev = e;
  }
}

TEST_CASE("quadrature refinement is converged") {
  BurgersExact coarse({64, 1});
  BurgersExact fine({128, 1});
  for (double t : {0.5, 5.0, 100.0}) {
    CHECK(std::abs(coarse.resolved_energy(t, 16) - fine.resolved_energy(t, 16)) < 1e-8);
  }
}

TEST_CASE("two-resolution self consistency pre-shock") {
  // The spectrum at t = 0.5 is still smooth; 16 and 4096 retained modes give
  // nearly the same energy. Frozen from the quadrature oracle itself.
  BurgersExact oracle({64, 64});
  const double e16 = oracle.resolved_energy(0.5, 16);
  const double e4096 = oracle.resolved_energy(0.5, 4096);
  CHECK(std::abs(e16 - e4096) < 3e-6);
  CHECK(e4096 >= e16);
}
