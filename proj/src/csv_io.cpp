#include "rmz/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rmz {

namespace {

std::string sidecar_path(const std::string& path) {
  const auto dot = path.find_last_of('.');
  const auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + ".coeffs";
  }
  return path.substr(0, dot) + ".coeffs";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string termination_name(Termination t) {
  switch (t) {
    case Termination::Completed:
      return "completed";
    case Termination::BlewUp:
      return "blew-up";
    case Termination::StepUnderflow:
      return "step-underflow";
  }
  return "?";
}

}  // namespace

void emit_csv(const RunResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emit_csv: cannot open '" + path + "' for writing");
  out << "t,energy";
  for (int i = 2; i <= result.order + 1; ++i) out << ",E" << i;
  out << "\n";
  for (const auto& s : result.series) {
    out << format_double(s.t);
    for (double m : s.moments) out << "," << format_double(m);
    out << "\n";
  }
  if (!out) throw std::runtime_error("emit_csv: write failed for '" + path + "'");

  std::ofstream side(sidecar_path(path));
  if (!side) {
    throw std::runtime_error("emit_csv: cannot open '" + sidecar_path(path) + "' for writing");
  }
  side << "status = " << termination_name(result.termination) << "\n";
  if (result.termination != Termination::Completed) {
    side << "termination_time = " << format_double(result.termination_time) << "\n";
  }
  if (result.switch_time) {
    side << "switch_time = " << format_double(*result.switch_time) << "\n";
    const auto& a = result.coefficients->a;
    for (int i = 0; i < a.size(); ++i) {
      side << "a" << (i + 1) << " = " << format_double(a(i)) << "\n";
    }
    side << "sigma =";
    for (int i = 0; i < result.switch_singular_values.size(); ++i) {
      side << " " << format_double(result.switch_singular_values(i));
    }
    side << "\n";
    side << "cond_B = " << format_double(result.cond_full) << "\n";
    if (result.cond_reduced > 0.0) {
      side << "cond_reduced = " << format_double(result.cond_reduced) << "\n";
    }
  } else if (result.switch_never_fired) {
    side << "switch = system entirely singular at t_end\n";
  }
}

CsvSeries parse_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("parse_csv: cannot open '" + path + "'");
  CsvSeries series;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("parse_csv: empty file '" + path + "'");
  std::istringstream head(line);
  std::string col;
  while (std::getline(head, col, ',')) series.columns.push_back(col);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<double> values;
    std::string tok;
    while (std::getline(row, tok, ',')) values.push_back(std::stod(tok));
    if (values.size() != series.columns.size()) {
      throw std::runtime_error("parse_csv: ragged row in '" + path + "'");
    }
    series.rows.push_back(std::move(values));
  }
  return series;
}

}  // namespace rmz
