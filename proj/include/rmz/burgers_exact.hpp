#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

namespace rmz {

/// Entropy solution of u_t + u u_x = 0 on [0, 2pi) with u(x,0) = sin x.
///
/// The solution is smooth until T = 1 and forms a standing shock at x = pi
/// afterwards (the left/right states are opposite by the odd symmetry of
/// sin about pi, so the Rankine-Hugoniot speed is zero). Pointwise values
/// come from a safeguarded Newton solve of the characteristic equation
/// xi + t sin xi = x on the branch attached to xi = 0; Fourier coefficients
/// come from shock-split Gauss-Legendre quadrature on [0, pi] and [pi, 2pi].
class BurgersExact {
 public:
  struct Params {
    int quad_points = 64;  // Gauss-Legendre points per panel
    int panels_per_side = 1;
  };

  explicit BurgersExact(Params params = {}) : params_(params) {}

  /// u(x, t) for x in [0, 2pi), t >= 0; u(pi, t) = 0 at the shock midpoint.
  double value(double x, double t) const;

  /// u_k(t) for k = -half..half-1 (the resolved set of a truncation with
  /// N = 2*half... caller passes half = N/2), indexed k + half.
  std::vector<std::complex<double>> fourier_coefficients(double t, int half) const;

  /// E1 = sum_{k in F} |u_k|^2 for F = [-N/2, N/2-1].
  double resolved_e1(double t, int resolved_modes) const;

  /// Plotted energy (1/2) E1.
  double resolved_energy(double t, int resolved_modes) const;

 private:
  Params params_;
};

/// Nodes and weights of n-point Gauss-Legendre quadrature on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace rmz
