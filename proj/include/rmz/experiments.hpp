#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmz/driver.hpp"

namespace rmz {

struct ExperimentRun {
  std::string name;
  RunConfig config;
  bool oracle = false;  // fig1's exact-solution series instead of a solver run
};

struct ExperimentSpec {
  std::string name;
  std::string out_dir;
  std::vector<ExperimentRun> runs;
};

/// name is one of fig1-burgers, fig2-euler, fig3-coefficient-sweep,
/// fig4-stability.
ExperimentSpec make_experiment(const std::string& name, const std::string& out_dir);

struct RunRecord {
  std::string name;
  std::string status;  // completed | blew-up | step-underflow | error
  std::optional<double> switch_time;
  std::optional<double> first_order_coeff;  // a_2, fig3
  std::optional<double> scale_ratio;        // fig3
  std::string csv_path;
  std::string error;
};

struct ExperimentOutcome {
  std::vector<RunRecord> records;
  std::optional<double> fig3_slope;  // Burgers fit through the origin
};

/// Executes every run, writes one CSV (+ sidecar) per run and a
/// manifest.json; fig3 additionally writes coefficients.csv with the fitted
/// slope. Per-run failures are recorded and do not abort the experiment.
ExperimentOutcome run_experiment(const ExperimentSpec& spec);

/// Scale ratio of the sweep: largest wavenumber active in the initial
/// condition over the largest wavenumber representable in F.
double scale_ratio(int resolved, int ic_max_wavenumber = 1);

}  // namespace rmz
