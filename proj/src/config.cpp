#include "rmz/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rmz {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(int line, const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    fail(line, "key '" + key + "': cannot parse '" + v + "' as a number");
  }
}

int parse_int(int line, const std::string& key, const std::string& v) {
  int out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    fail(line, "key '" + key + "': cannot parse '" + v + "' as an integer");
  }
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool order_given = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string entry = trim(raw);
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value', got '" + entry + "'");
    const std::string key = trim(entry.substr(0, eq));
    const std::string value = trim(entry.substr(eq + 1));
    if (key.empty()) fail(line, "empty key");
    if (value.empty()) fail(line, "key '" + key + "': empty value");

    if (key == "equation") {
      if (value == "burgers") {
        cfg.equation = Equation::Burgers;
      } else if (value == "euler3d") {
        cfg.equation = Equation::Euler3d;
      } else {
        fail(line, "key 'equation': expected burgers|euler3d, got '" + value + "'");
      }
    } else if (key == "N") {
      const int n = parse_int(line, key, value);
      if (n % 2 != 0) fail(line, "N must be even");
      if (n < 2) fail(line, "N must be >= 2");
      cfg.resolved = n;
    } else if (key == "order") {
      const int o = parse_int(line, key, value);
      if (o < 1) fail(line, "order must be >= 1");
      cfg.order = o;
      order_given = true;
    } else if (key == "variant") {
      if (value == "full") {
        cfg.variant = Variant::Full;
      } else if (value == "rmz") {
        cfg.variant = Variant::Rmz;
      } else if (value == "tmodel") {
        cfg.variant = Variant::TModel;
      } else if (value == "mz-unrenormalized") {
        cfg.variant = Variant::MzUnrenormalized;
      } else {
        fail(line, "key 'variant': expected full|rmz|tmodel|mz-unrenormalized");
      }
    } else if (key == "solve") {
      if (value == "full-solve") {
        cfg.solve = SolveVariant::FullSolve;
      } else if (value == "pinned-markovian") {
        cfg.solve = SolveVariant::PinnedMarkovian;
      } else {
        fail(line, "key 'solve': expected full-solve|pinned-markovian");
      }
    } else if (key == "TOL") {
      cfg.switch_tol = parse_double(line, key, value);
      if (!(cfg.switch_tol > 0.0)) fail(line, "TOL must be positive");
    } else if (key == "svd_cutoff") {
      cfg.svd_cutoff = parse_double(line, key, value);
      if (!(cfg.svd_cutoff > 0.0)) fail(line, "svd_cutoff must be positive");
    } else if (key == "rel_tol") {
      cfg.rel_tol = parse_double(line, key, value);
      if (!(cfg.rel_tol > 0.0)) fail(line, "rel_tol must be positive");
    } else if (key == "abs_tol") {
      cfg.abs_tol = parse_double(line, key, value);
      if (!(cfg.abs_tol > 0.0)) fail(line, "abs_tol must be positive");
    } else if (key == "t_end") {
      cfg.t_end = parse_double(line, key, value);
      if (!(cfg.t_end > 0.0)) fail(line, "t_end must be positive");
    } else if (key == "ic") {
      cfg.initial_condition = value;
    } else if (key == "sample_interval") {
      cfg.sample_interval = parse_double(line, key, value);
      if (cfg.sample_interval < 0.0) fail(line, "sample_interval must be >= 0");
    } else if (key == "forced_coeffs") {
      cfg.forced_coeffs.clear();
      std::istringstream vs(value);
      std::string tok;
      while (std::getline(vs, tok, ',')) {
        cfg.forced_coeffs.push_back(parse_double(line, key, trim(tok)));
      }
      if (cfg.forced_coeffs.empty()) fail(line, "forced_coeffs: empty list");
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }

  if (cfg.variant == Variant::TModel && order_given && cfg.order != 1) {
    throw ConfigError("config: variant tmodel fixes order = 1");
  }
  if (!cfg.forced_coeffs.empty() &&
      static_cast<int>(cfg.forced_coeffs.size()) != cfg.order + 1) {
    throw ConfigError("config: forced_coeffs needs order+1 entries");
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Full:
      return "full";
    case Variant::Rmz:
      return "rmz";
    case Variant::TModel:
      return "tmodel";
    case Variant::MzUnrenormalized:
      return "mz-unrenormalized";
  }
  return "?";
}

std::string equation_name(Equation e) {
  return e == Equation::Burgers ? "burgers" : "euler3d";
}

}  // namespace rmz
