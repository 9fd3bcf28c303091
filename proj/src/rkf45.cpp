#include "rmz/rkf45.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rmz {

namespace {

// Classical Fehlberg tableau.
constexpr double kC[6] = {0.0, 1.0 / 4, 3.0 / 8, 12.0 / 13, 1.0, 1.0 / 2};
constexpr double kA[6][5] = {
    {},
    {1.0 / 4},
    {3.0 / 32, 9.0 / 32},
    {1932.0 / 2197, -7200.0 / 2197, 7296.0 / 2197},
    {439.0 / 216, -8.0, 3680.0 / 513, -845.0 / 4104},
    {-8.0 / 27, 2.0, -3544.0 / 2565, 1859.0 / 4104, -11.0 / 40},
};
constexpr double kB5[6] = {16.0 / 135, 0.0, 6656.0 / 12825, 28561.0 / 56430, -9.0 / 50, 2.0 / 55};
constexpr double kB4[6] = {25.0 / 216, 0.0, 1408.0 / 2565, 2197.0 / 4104, -1.0 / 5, 0.0};

bool finite(const Eigen::VectorXcd& v) { return v.allFinite(); }

}  // namespace

IntegrateOutcome integrate(const OdeProblem& p,
                           const std::function<StepControl(double, const Eigen::VectorXcd&)>& on_accept) {
  if (!(p.t1 > p.t0)) throw std::invalid_argument("integrate: t1 must exceed t0");
  if (!(p.rel_tol > 0.0) || !(p.abs_tol > 0.0)) {
    throw std::invalid_argument("integrate: tolerances must be positive");
  }

  const double span = p.t1 - p.t0;
  const double h_min = 1e-14 * span;
  double t = p.t0;
  Eigen::VectorXcd y = p.y0;
  double h = p.initial_step_fraction * span;

  IntegrateOutcome out;
  Eigen::VectorXcd k[6];

  while (t < p.t1) {
    h = std::min(h, p.t1 - t);
    if (h < h_min) {
      out.status = IntegrateStatus::StepUnderflow;
      out.t = t;
      out.y = std::move(y);
      return out;
    }

    k[0] = p.rhs(t, y);
    bool stage_finite = finite(k[0]);
    for (int s = 1; s < 6 && stage_finite; ++s) {
      Eigen::VectorXcd ys = y;
      for (int j = 0; j < s; ++j) {
        if (kA[s][j] != 0.0) ys += (h * kA[s][j]) * k[j];
      }
      k[s] = p.rhs(t + kC[s] * h, ys);
      stage_finite = finite(k[s]);
    }

    Eigen::VectorXcd y5, err;
    double err_norm = 0.0;
    if (stage_finite) {
      y5 = y;
      err = Eigen::VectorXcd::Zero(y.size());
      for (int s = 0; s < 6; ++s) {
        if (kB5[s] != 0.0) y5 += (h * kB5[s]) * k[s];
        const double d = kB5[s] - kB4[s];
        if (d != 0.0) err += (h * d) * k[s];
      }
      err_norm = err.norm();
      stage_finite = finite(y5) && std::isfinite(err_norm);
    }
    if (!stage_finite) {
      out.status = IntegrateStatus::NonFinite;
      out.t = t;
      out.y = std::move(y);
      return out;
    }

    const double tol = p.rel_tol * y.norm() + p.abs_tol;
    if (err_norm <= tol) {
      t = (p.t1 - t <= h * (1.0 + 1e-12)) ? p.t1 : t + h;
      y = std::move(y5);
      ++out.accepted;
      if (on_accept && on_accept(t, y) == StepControl::Stop) {
        out.status = IntegrateStatus::StoppedByCallback;
        out.t = t;
        out.y = std::move(y);
        return out;
      }
    } else {
      ++out.rejected;
    }

    const double grow = err_norm > 0.0 ? 0.9 * std::pow(tol / err_norm, 0.2) : 5.0;
    h *= std::clamp(grow, 0.2, 5.0);
  }

  out.status = IntegrateStatus::Completed;
  out.t = p.t1;
  out.y = std::move(y);
  return out;
}

}  // namespace rmz
