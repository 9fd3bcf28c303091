#pragma once

#include <stdexcept>
#include <string>

#include "rmz/driver.hpp"

namespace rmz {

/// Raised on malformed run configuration text; the message names the
/// offending key and line.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses flat `key = value` text (one pair per line, '#' comments) into a
/// RunConfig. Unspecified keys keep their documented defaults.
RunConfig parse_config(const std::string& text);

RunConfig parse_config_file(const std::string& path);

std::string variant_name(Variant v);
std::string equation_name(Equation e);

}  // namespace rmz
