#pragma once

#include <string>
#include <vector>

#include "rmz/driver.hpp"

namespace rmz {

/// Writes `t,energy,E2,...,E_{order+1}` rows with 17 significant digits and
/// a `.coeffs` sidecar holding the switch diagnostics.
void emit_csv(const RunResult& result, const std::string& path);

struct CsvSeries {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

CsvSeries parse_csv(const std::string& path);

}  // namespace rmz
