#include "cli/run_config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <boost/algorithm/string/trim.hpp>

#include "dtls/errors.hpp"

namespace dtls::cli {

namespace {

double parse_double(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || errno == ERANGE) {
    throw ConfigError("invalid number for '" + key + "': '" + text + "'");
  }
  return v;
}

long parse_int(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0' || errno == ERANGE) {
    throw ConfigError("invalid integer for '" + key + "': '" + text + "'");
  }
  return v;
}

SweepSpec& sweep_of(RunConfig& cfg) {
  if (!cfg.sweep) cfg.sweep = SweepSpec{};
  return *cfg.sweep;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void RunConfig::validate() const {
  try {
    params.validate();
    solver.validate();
    if (sweep) sweep->validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (solver.grid_points < 64) throw ConfigError("grid_points must be >= 64");
  if (!(bc.omega_pi_plus_in > 0.0)) throw ConfigError("omega_pi_plus_in must be > 0");
  if (!(bc.omega_sigma_plus_in > 0.0)) throw ConfigError("omega_sigma_plus_in must be > 0");
  if (!std::isfinite(bc.omega_pi_minus_in)) throw ConfigError("omega_pi_minus_in must be finite");
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  auto num = [&] { return parse_double(key, value); };
  auto& p = cfg.params;
  if (key == "gamma") p.gamma = num();
  else if (key == "gamma_d") p.gamma_d = num();
  else if (key == "gamma_ze") p.gamma_ze = num();
  else if (key == "delta0") p.delta0 = num();
  else if (key == "alpha0_L") p.alpha0_L = num();
  else if (key == "phi") p.phi = num();
  else if (key == "omega_pi_plus_in") cfg.bc.omega_pi_plus_in = num();
  else if (key == "omega_pi_minus_in") cfg.bc.omega_pi_minus_in = num();
  else if (key == "omega_sigma_plus_in") cfg.bc.omega_sigma_plus_in = num();
  else if (key == "grid_points") cfg.solver.grid_points = static_cast<int>(parse_int(key, value));
  else if (key == "ode_rel_tol") cfg.solver.ode_rel_tol = num();
  else if (key == "ode_abs_tol") cfg.solver.ode_abs_tol = num();
  else if (key == "shoot_tol") cfg.solver.shoot_tol = num();
  else if (key == "max_newton_iter") cfg.solver.max_newton_iter = static_cast<int>(parse_int(key, value));
  else if (key == "threads") {
    const long t = parse_int(key, value);
    if (t < 0) throw ConfigError("threads must be >= 0");
    cfg.threads = static_cast<unsigned>(t);
  } else if (key == "sweep_var") {
    if (value == "none") {
      cfg.sweep.reset();
      return;
    }
    try {
      sweep_of(cfg).variable = parse_sweep_variable(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "sweep_from") sweep_of(cfg).from = num();
  else if (key == "sweep_to") sweep_of(cfg).to = num();
  else if (key == "sweep_steps") sweep_of(cfg).steps = static_cast<int>(parse_int(key, value));
  else throw ConfigError("unknown config key '" + key + "'");
}

RunConfig parse_config(std::istream& in, const std::string& origin, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    boost::algorithm::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = boost::algorithm::trim_copy(line.substr(0, eq));
    const std::string value = boost::algorithm::trim_copy(line.substr(eq + 1));
    try {
      apply_setting(base, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in, path, std::move(base));
}

std::string serialize(const RunConfig& cfg) {
  std::ostringstream os;
  auto put = [&](const char* key, double v) { os << key << " = " << format_double(v) << '\n'; };
  put("gamma", cfg.params.gamma);
  put("gamma_d", cfg.params.gamma_d);
  put("gamma_ze", cfg.params.gamma_ze);
  put("delta0", cfg.params.delta0);
  put("alpha0_L", cfg.params.alpha0_L);
  put("phi", cfg.params.phi);
  put("omega_pi_plus_in", cfg.bc.omega_pi_plus_in);
  put("omega_pi_minus_in", cfg.bc.omega_pi_minus_in);
  put("omega_sigma_plus_in", cfg.bc.omega_sigma_plus_in);
  os << "grid_points = " << cfg.solver.grid_points << '\n';
  put("ode_rel_tol", cfg.solver.ode_rel_tol);
  put("ode_abs_tol", cfg.solver.ode_abs_tol);
  put("shoot_tol", cfg.solver.shoot_tol);
  os << "max_newton_iter = " << cfg.solver.max_newton_iter << '\n';
  os << "threads = " << cfg.threads << '\n';
  if (cfg.sweep) {
    os << "sweep_var = " << to_string(cfg.sweep->variable) << '\n';
    put("sweep_from", cfg.sweep->from);
    put("sweep_to", cfg.sweep->to);
    os << "sweep_steps = " << cfg.sweep->steps << '\n';
  } else {
    os << "sweep_var = none\n";
  }
  return os.str();
}

}  // namespace dtls::cli
