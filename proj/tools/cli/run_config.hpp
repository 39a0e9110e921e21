#pragma once

// Flat `key = value` run configuration for the command-line driver.

#include <iosfwd>
#include <optional>
#include <string>

#include "dtls/propagation.hpp"
#include "dtls/scan.hpp"

namespace dtls::cli {

struct RunConfig {
  PhysicalParams params = PhysicalParams::radiative(0.0, 0.3, 0.0);
  BoundaryConditions bc;
  SolverOptions solver;
  std::optional<SweepSpec> sweep;
  unsigned threads = 0;

  /// Throws ConfigError.
  void validate() const;
};

/// Applies one `key = value` assignment. Throws ConfigError on unknown keys
/// or malformed values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Parses a config stream; '#' starts a comment, blank lines are ignored.
/// `origin` names the source in error messages.
RunConfig parse_config(std::istream& in, const std::string& origin = "<config>",
                       RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});

/// Every key, one per line, with values printed to round-trip exactly.
std::string serialize(const RunConfig& cfg);

/// Shortest decimal with 17 significant digits.
std::string format_double(double v);

}  // namespace dtls::cli
