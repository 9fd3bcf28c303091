#pragma once

#include <Eigen/Core>
#include <functional>

namespace rmz {

enum class StepControl { Continue, Stop };

enum class IntegrateStatus { Completed, StoppedByCallback, NonFinite, StepUnderflow };

struct OdeProblem {
  std::function<Eigen::VectorXcd(double, const Eigen::VectorXcd&)> rhs;
  double t0 = 0.0;
  double t1 = 1.0;
  Eigen::VectorXcd y0;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double initial_step_fraction = 1e-4;  // h0 = fraction * (t1 - t0)
};

struct IntegrateOutcome {
  IntegrateStatus status = IntegrateStatus::Completed;
  double t = 0.0;
  Eigen::VectorXcd y;
  long accepted = 0;
  long rejected = 0;
};

/// Adaptive Runge-Kutta-Fehlberg 4(5). The step is accepted when the
/// embedded error estimate satisfies ||err|| <= rel_tol ||y|| + abs_tol and
/// the state advances with the fifth-order solution. on_accept runs after
/// each accepted step and may stop the integration early.
IntegrateOutcome integrate(
    const OdeProblem& problem,
    const std::function<StepControl(double, const Eigen::VectorXcd&)>& on_accept = {});

}  // namespace rmz
