#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "rmz/burgers_exact.hpp"
#include "rmz/config.hpp"
#include "rmz/csv_io.hpp"
#include "rmz/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Renormalized Mori-Zwanzig reduced models for Burgers and 3D Euler"};
  app.require_subcommand(1);

  std::string config_path;
  std::string run_out = "";
  auto* run_cmd = app.add_subcommand("run", "Execute a single run from a key=value config file");
  run_cmd->add_option("config", config_path, "Path to the config file")->required();
  run_cmd->add_option("--out", run_out, "Output CSV path (default: <config stem>.csv)");

  std::string experiment_name;
  std::string experiment_out = "out";
  auto* exp_cmd = app.add_subcommand("experiment", "Run one of the paper's experiment suites");
  exp_cmd->add_option("name", experiment_name,
                      "fig1-burgers | fig2-euler | fig3-coefficient-sweep | fig4-stability")
      ->required();
  exp_cmd->add_option("--out", experiment_out, "Output directory");

  double oracle_t = 0.0;
  int oracle_n = 16;
  auto* oracle_cmd = app.add_subcommand("oracle", "Query the exact Burgers reference solution");
  std::string oracle_eq;
  oracle_cmd->add_option("equation", oracle_eq, "must be 'burgers'")->required();
  oracle_cmd->add_option("--t", oracle_t, "Evaluation time")->required();
  oracle_cmd->add_option("--n", oracle_n, "Resolved mode count N");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      rmz::RunConfig cfg;
      try {
        cfg = rmz::parse_config_file(config_path);
      } catch (const rmz::ConfigError& ex) {
        std::cerr << ex.what() << "\n";
        return 1;
      }
      if (run_out.empty()) {
        const auto slash = config_path.find_last_of('/');
        const std::string base = slash == std::string::npos ? config_path : config_path.substr(slash + 1);
        const auto dot = base.find_last_of('.');
        run_out = (dot == std::string::npos ? base : base.substr(0, dot)) + ".csv";
      }
      const rmz::RunResult result = rmz::run(cfg);
      rmz::emit_csv(result, run_out);
      std::cout << "wrote " << run_out << "\n";
      if (result.switch_time) {
        std::cout << "switch_time = " << *result.switch_time << "\n";
        const auto& a = result.coefficients->a;
        std::cout << "coefficients =";
        for (int i = 0; i < a.size(); ++i) std::cout << " " << a(i);
        std::cout << "\n";
      } else if (result.switch_never_fired) {
        std::cout << "system entirely singular at t_end; run completed on the full system\n";
      }
      if (result.termination == rmz::Termination::BlewUp) {
        std::cout << "blew up at t = " << result.termination_time << "\n";
        if (cfg.variant != rmz::Variant::MzUnrenormalized) return 2;
      } else if (result.termination == rmz::Termination::StepUnderflow) {
        std::cout << "step underflow at t = " << result.termination_time << "\n";
        return 2;
      }
      return 0;
    }

    if (*exp_cmd) {
      const auto spec = rmz::make_experiment(experiment_name, experiment_out);
      const auto outcome = rmz::run_experiment(spec);
      for (const auto& r : outcome.records) {
        std::cout << r.name << ": " << r.status;
        if (r.switch_time) std::cout << " (switch at t = " << *r.switch_time << ")";
        if (!r.error.empty()) std::cout << " [" << r.error << "]";
        std::cout << "\n";
      }
      if (outcome.fig3_slope) std::cout << "fitted slope = " << *outcome.fig3_slope << "\n";
      for (const auto& r : outcome.records) {
        if (r.status == "error") return 2;
      }
      return 0;
    }

    if (*oracle_cmd) {
      if (oracle_eq != "burgers") {
        std::cerr << "oracle: only the burgers reference is available\n";
        return 1;
      }
      rmz::BurgersExact oracle;
      std::printf("t = %g, N = %d\n", oracle_t, oracle_n);
      std::printf("resolved_energy = %.16e\n", oracle.resolved_energy(oracle_t, oracle_n));
      std::printf("E1 = %.16e\n", oracle.resolved_e1(oracle_t, oracle_n));
      return 0;
    }
  } catch (const rmz::ConfigError& ex) {
    std::cerr << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
