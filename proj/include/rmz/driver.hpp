#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmz/renormalizer.hpp"
#include "rmz/rkf45.hpp"

namespace rmz {

enum class Variant { Full, Rmz, TModel, MzUnrenormalized };

struct RunConfig {
  Equation equation = Equation::Burgers;
  int resolved = 16;  // N per dimension; the full grid has M = 2N
  int order = 3;      // memory expansion order lambda
  Variant variant = Variant::Rmz;
  SolveVariant solve = SolveVariant::PinnedMarkovian;
  double switch_tol = 1e-12;
  double svd_cutoff = 1e-13;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double t_end = 100.0;
  std::string initial_condition = "default";  // sine | taylor-green
  double sample_interval = 0.0;               // 0 = every accepted step
  std::vector<double> forced_coeffs;          // diagnostic: reduced-only run with fixed a
};

enum class Termination { Completed, BlewUp, StepUnderflow };

struct Sample {
  double t = 0.0;
  std::vector<double> moments;  // (1/2) E1, E2, ..., E_{order+1}
};

struct RunResult {
  int order = 0;
  std::vector<Sample> series;
  std::optional<double> switch_time;
  std::optional<CoefficientVector> coefficients;
  Eigen::VectorXd switch_singular_values;
  double cond_full = 0.0;
  double cond_reduced = 0.0;
  bool switch_never_fired = false;  // rMZ ran out of full-system time singular
  Termination termination = Termination::Completed;
  double termination_time = 0.0;
  long accepted_steps = 0;
};

RunResult run_full(const RunConfig& cfg);
RunResult run_rmz(const RunConfig& cfg);
RunResult run_tmodel(const RunConfig& cfg);
RunResult run_unrenormalized(const RunConfig& cfg);

/// Dispatch on cfg.variant.
RunResult run(const RunConfig& cfg);

/// Linear interpolation of the plotted energy (1/2) E1 at time t.
double energy_at(const RunResult& result, double t);

Truncation truncation_for(const RunConfig& cfg);
SpectralField initial_condition_for(const RunConfig& cfg, const Truncation& trunc);

}  // namespace rmz
