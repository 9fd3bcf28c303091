#include "rmz/driver.hpp"

#include <cmath>
#include <stdexcept>

namespace rmz {

namespace {

std::vector<double> sample_moments(const SpectralField& state, int order) {
  auto m = resolved_moments(state, order + 1);
  m[0] *= 0.5;  // plotted energy
  return m;
}

SpectralField field_from_vector(const Truncation& trunc, int ncomp, const Eigen::VectorXcd& y) {
  SpectralField f(trunc, ncomp);
  f.data() = y;
  return f;
}

/// Records the moment series at the configured cadence and flags blow-up.
class Recorder {
 public:
  Recorder(const RunConfig& cfg, RunResult& result, const Truncation& trunc, int ncomp)
      : cfg_(cfg), result_(result), trunc_(trunc), ncomp_(ncomp) {}

  void record(double t, const Eigen::VectorXcd& y, bool force = false) {
    if (!force && cfg_.sample_interval > 0.0 && t < next_sample_ && t < cfg_.t_end) return;
    const SpectralField f = field_from_vector(trunc_, ncomp_, y);
    result_.series.push_back({t, sample_moments(f, cfg_.order)});
    while (next_sample_ <= t) next_sample_ += cfg_.sample_interval;
  }

  bool blown_up(double t, const Eigen::VectorXcd& y) {
    const SpectralField f = field_from_vector(trunc_, ncomp_, y);
    const double e1 = resolved_moments(f, 1)[0];
    if (!std::isfinite(e1) || e1 > 10.0 * initial_e1_) {
      result_.termination = Termination::BlewUp;
      result_.termination_time = t;
      return true;
    }
    return false;
  }

  void set_initial_e1(double e1) { initial_e1_ = e1; }

 private:
  const RunConfig& cfg_;
  RunResult& result_;
  Truncation trunc_;
  int ncomp_;
  double next_sample_ = 0.0;
  double initial_e1_ = 0.0;
};

void apply_outcome(const IntegrateOutcome& outcome, RunResult& result) {
  result.accepted_steps += outcome.accepted;
  switch (outcome.status) {
    case IntegrateStatus::Completed:
    case IntegrateStatus::StoppedByCallback:
      break;
    case IntegrateStatus::NonFinite:
      result.termination = Termination::BlewUp;
      result.termination_time = outcome.t;
      break;
    case IntegrateStatus::StepUnderflow:
      result.termination = Termination::StepUnderflow;
      result.termination_time = outcome.t;
      break;
  }
}

/// Reduced-model integration from (t_start, uhat) to cfg.t_end.
void integrate_reduced(const RunConfig& cfg, const Eigen::VectorXd& coeffs, double t_start,
                       const SpectralField& uhat, const BilinearKernel& kernel,
                       RunResult& result, Recorder& recorder) {
  OdeProblem p;
  p.t0 = t_start;
  p.t1 = cfg.t_end;
  p.y0 = uhat.data();
  p.rel_tol = cfg.rel_tol;
  p.abs_tol = cfg.abs_tol;
  p.rhs = [&](double t, const Eigen::VectorXcd& y) {
    const SpectralField u = field_from_vector(kernel.truncation(), kernel.components(), y);
    return reduced_rhs(t, u, coeffs, cfg.order, kernel).data();
  };
  const auto outcome = integrate(p, [&](double t, const Eigen::VectorXcd& y) {
    if (recorder.blown_up(t, y)) return StepControl::Stop;
    recorder.record(t, y);
    return StepControl::Continue;
  });
  apply_outcome(outcome, result);
}

}  // namespace

Truncation truncation_for(const RunConfig& cfg) {
  if (cfg.resolved < 2 || cfg.resolved % 2 != 0) {
    throw std::invalid_argument("run config: N must be even and >= 2");
  }
  return Truncation::make(2 * cfg.resolved, cfg.equation == Equation::Burgers ? 1 : 3);
}

SpectralField initial_condition_for(const RunConfig& cfg, const Truncation& trunc) {
  const std::string& name = cfg.initial_condition;
  if (cfg.equation == Equation::Burgers) {
    if (name == "default" || name == "sine") return ic_sine(trunc);
  } else {
    if (name == "default" || name == "taylor-green") return ic_taylor_green(trunc);
  }
  throw std::invalid_argument("run config: unknown initial condition '" + name + "'");
}

RunResult run_full(const RunConfig& cfg) {
  const Truncation trunc = truncation_for(cfg);
  const auto kernel = make_kernel(cfg.equation, trunc);
  const SpectralField u0 = initial_condition_for(cfg, trunc);

  RunResult result;
  result.order = cfg.order;
  Recorder recorder(cfg, result, trunc, kernel->components());
  recorder.set_initial_e1(resolved_moments(u0, 1)[0]);
  recorder.record(0.0, u0.data(), true);

  OdeProblem p;
  p.t0 = 0.0;
  p.t1 = cfg.t_end;
  p.y0 = u0.data();
  p.rel_tol = cfg.rel_tol;
  p.abs_tol = cfg.abs_tol;
  p.rhs = [&](double, const Eigen::VectorXcd& y) {
    return kernel->full_rhs(field_from_vector(trunc, kernel->components(), y)).data();
  };
  const auto outcome = integrate(p, [&](double t, const Eigen::VectorXcd& y) {
    recorder.record(t, y);
    return StepControl::Continue;
  });
  apply_outcome(outcome, result);
  return result;
}

RunResult run_rmz(const RunConfig& cfg) {
  if (cfg.order < 1) throw std::invalid_argument("rmz: order must be >= 1");
  const Truncation trunc = truncation_for(cfg);
  const auto kernel = make_kernel(cfg.equation, trunc);
  const SpectralField u0 = initial_condition_for(cfg, trunc);

  RunResult result;
  result.order = cfg.order;
  Recorder recorder(cfg, result, trunc, kernel->components());
  recorder.set_initial_e1(resolved_moments(u0, 1)[0]);
  recorder.record(0.0, u0.data(), true);

  // Diagnostic mode: skip the full phase and run the reduced model from t=0
  // with the forced coefficient vector.
  if (!cfg.forced_coeffs.empty()) {
    if (static_cast<int>(cfg.forced_coeffs.size()) != cfg.order + 1) {
      throw std::invalid_argument("rmz: forced coefficient count must be order+1");
    }
    Eigen::VectorXd a(cfg.order + 1);
    for (int i = 0; i <= cfg.order; ++i) a(i) = cfg.forced_coeffs[i];
    integrate_reduced(cfg, a, 0.0, u0, *kernel, result, recorder);
    return result;
  }

  SwitchMonitor monitor(cfg.switch_tol);
  std::optional<MatchingSystem> fired_system;
  double switch_t = 0.0;
  Eigen::VectorXcd switch_state;

  OdeProblem p;
  p.t0 = 0.0;
  p.t1 = cfg.t_end;
  p.y0 = u0.data();
  p.rel_tol = cfg.rel_tol;
  p.abs_tol = cfg.abs_tol;
  p.rhs = [&](double, const Eigen::VectorXcd& y) {
    return kernel->full_rhs(field_from_vector(trunc, kernel->components(), y)).data();
  };
  const auto outcome = integrate(p, [&](double t, const Eigen::VectorXcd& y) {
    const SpectralField state = field_from_vector(trunc, kernel->components(), y);
    MatchingSystem sys = assemble_system(t, state, cfg.order, *kernel);
    if (monitor.check(sys)) {
      fired_system = std::move(sys);
      switch_t = t;
      switch_state = y;
      recorder.record(t, y, true);
      return StepControl::Stop;
    }
    recorder.record(t, y);
    return StepControl::Continue;
  });
  apply_outcome(outcome, result);
  if (result.termination != Termination::Completed) return result;

  if (!fired_system) {
    result.switch_never_fired = true;  // completed on the full system
    return result;
  }

  SolveDiagnostics diag;
  CoefficientVector coeffs =
      solve_coefficients(*fired_system, cfg.solve, cfg.svd_cutoff, &diag);
  result.switch_time = switch_t;
  result.coefficients = coeffs;
  result.switch_singular_values = fired_system->singular_values;
  result.cond_full = diag.cond_full;
  result.cond_reduced = diag.cond_reduced;

  const SpectralField uhat = project(
      field_from_vector(trunc, kernel->components(), switch_state), Part::Resolved);
  recorder.record(switch_t, uhat.data(), true);
  integrate_reduced(cfg, coeffs.a, switch_t, uhat, *kernel, result, recorder);
  return result;
}

RunResult run_tmodel(const RunConfig& cfg) {
  RunConfig tcfg = cfg;
  tcfg.order = 1;
  tcfg.forced_coeffs = {1.0, 1.0};
  tcfg.variant = Variant::TModel;
  return run_rmz(tcfg);
}

RunResult run_unrenormalized(const RunConfig& cfg) {
  RunConfig ucfg = cfg;
  ucfg.forced_coeffs.assign(cfg.order + 1, 1.0);
  ucfg.variant = Variant::MzUnrenormalized;
  return run_rmz(ucfg);
}

RunResult run(const RunConfig& cfg) {
  switch (cfg.variant) {
    case Variant::Full:
      return run_full(cfg);
    case Variant::Rmz:
      return run_rmz(cfg);
    case Variant::TModel:
      return run_tmodel(cfg);
    case Variant::MzUnrenormalized:
      return run_unrenormalized(cfg);
  }
  throw std::logic_error("unknown variant");
}

double energy_at(const RunResult& result, double t) {
  const auto& s = result.series;
  if (s.empty()) throw std::runtime_error("energy_at: empty series");
  if (t <= s.front().t) return s.front().moments[0];
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i].t >= t) {
      const double dt = s[i].t - s[i - 1].t;
      if (dt <= 0.0) return s[i].moments[0];
      const double w = (t - s[i - 1].t) / dt;
      return (1.0 - w) * s[i - 1].moments[0] + w * s[i].moments[0];
    }
  }
  return s.back().moments[0];
}

}  // namespace rmz
