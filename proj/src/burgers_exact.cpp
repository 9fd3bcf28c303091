#include "rmz/burgers_exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rmz {

namespace {

constexpr double kPi = std::numbers::pi;

/// Characteristic root on (0, pi): solves xi + t sin(xi) = x for the branch
/// attached to xi = 0, which the shock at pi leaves single-valued.
double characteristic_root(double x, double t) {
  double lo = 0.0;
  double hi = t > 1.0 ? std::acos(-1.0 / t) : kPi;
  auto g = [&](double xi) { return xi + t * std::sin(xi) - x; };
  // g(lo) = -x < 0 and g(hi) > 0 (the fold point maps beyond pi for t > 1).
  double xi = std::min(hi, x / (1.0 + t));
  for (int iter = 0; iter < 200; ++iter) {
    const double gx = g(xi);
    if (gx > 0.0) {
      hi = xi;
    } else {
      lo = xi;
    }
    const double dg = 1.0 + t * std::cos(xi);
    double next = dg > 1e-12 ? xi - gx / dg : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - xi) < 1e-15 * (1.0 + std::abs(xi))) return next;
    xi = next;
  }
  throw std::runtime_error("burgers oracle: characteristic solve failed to converge");
}

}  // namespace

double BurgersExact::value(double x, double t) const {
  x = std::fmod(x, 2.0 * kPi);
  if (x < 0.0) x += 2.0 * kPi;
  if (x == 0.0 || x == kPi) return 0.0;
  if (x < kPi) return std::sin(characteristic_root(x, t));
  return -std::sin(characteristic_root(2.0 * kPi - x, t));
}

std::vector<std::complex<double>> BurgersExact::fourier_coefficients(double t, int half) const {
  std::vector<double> nodes, weights;
  std::vector<double> xs, ws;
  // Panels split at the shock position pi, then optionally subdivided.
  for (int side = 0; side < 2; ++side) {
    const double lo = side == 0 ? 0.0 : kPi;
    for (int p = 0; p < params_.panels_per_side; ++p) {
      const double a = lo + kPi * p / params_.panels_per_side;
      const double b = lo + kPi * (p + 1) / params_.panels_per_side;
      gauss_legendre(params_.quad_points, a, b, nodes, weights);
      xs.insert(xs.end(), nodes.begin(), nodes.end());
      ws.insert(ws.end(), weights.begin(), weights.end());
    }
  }

  std::vector<double> u(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) u[i] = value(xs[i], t);

  std::vector<std::complex<double>> coeffs(2 * half);
  for (int k = -half; k < half; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i < xs.size(); ++i) {
      acc += ws[i] * u[i] * std::exp(std::complex<double>(0.0, -k * xs[i]));
    }
    coeffs[k + half] = acc / (2.0 * kPi);
  }
  return coeffs;
}

double BurgersExact::resolved_e1(double t, int resolved_modes) const {
  const auto coeffs = fourier_coefficients(t, resolved_modes / 2);
  double e1 = 0.0;
  for (const auto& c : coeffs) e1 += std::norm(c);
  return e1;
}

double BurgersExact::resolved_energy(double t, int resolved_modes) const {
  return 0.5 * resolved_e1(t, resolved_modes);
}

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);
    nodes[i] = xm - xl * z;
    nodes[n - 1 - i] = xm + xl * z;
    weights[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

}  // namespace rmz
